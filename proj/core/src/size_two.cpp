#include "mastermind/strategies/size_two.hpp"

#include "mastermind/errors.hpp"
#include "mastermind/strategies/linalg.hpp"

namespace mastermind {

int delta_contribution(int answer, const std::vector<int> &reference_answers,
                       int block_len, int k)
{
    if (static_cast<int>(reference_answers.size()) != k)
        throw std::invalid_argument("delta_contribution: need exactly k reference answers");
    long long sum = 0;
    for (int value : reference_answers)
        sum += value;
    if ((sum - block_len) % k != 0)
        throw LayoutCorruptionError("delta_contribution: reference sum not divisible by k");
    const long long delta = answer - (sum - block_len) / k;
    if (delta < 0 || delta > block_len)
        throw LayoutCorruptionError("delta_contribution: contribution out of range");
    return static_cast<int>(delta);
}

SizeTwoHistory reconstruct_history_size_two(const CodeString &x, const LayoutParams &layout)
{
    const int i = block_index_size_two(x, layout);
    const Block block = layout.block(i);
    const int len = block.size();
    const int stride = layout.record_stride(len);
    const int q = query_count_size_two(x, layout);
    if (q != layout.t + layout.k)
        throw LayoutCorruptionError("reconstruct_history_size_two: record region incomplete");

    SizeTwoHistory history;
    for (int m = 1; m <= q; ++m) {
        const int first = layout.ln + (m - 1) * stride + 1;
        CodeString fragment = block_of(x, Block{first, first + len - 1});
        const int answer = binary_decode(x, first + len, layout.ln);
        if (x[static_cast<std::size_t>(first + len + layout.ln - 1)] != 1)
            throw LayoutCorruptionError("reconstruct_history_size_two: missing record marker");
        if (m <= layout.k) {
            // reference record: a constant block of color m-1
            for (Color c : fragment)
                if (c != m - 1)
                    throw LayoutCorruptionError(
                        "reconstruct_history_size_two: reference fragment not constant");
            history.reference_answers.push_back(answer);
        } else {
            history.samples.emplace_back(std::move(fragment), answer);
        }
    }
    return history;
}

SizeTwoStrategy::SizeTwoStrategy(GameParams params, LayoutParams layout)
  : params_(params), layout_(std::move(layout))
{
    params_.validate();
    if (layout_.kind != LayoutKind::size_two)
        throw std::invalid_argument("SizeTwoStrategy: layout kind mismatch");
    if (layout_.n != params_.n || layout_.k != params_.k)
        throw std::invalid_argument("SizeTwoStrategy: layout dimensions mismatch");
}

SizeTwoStrategy SizeTwoStrategy::with_default_layout(GameParams params, double eps)
{
    return SizeTwoStrategy(params, LayoutParams::size_two(params, eps));
}

SizeTwoStrategy::Cells SizeTwoStrategy::split_cells(const MemoryState &memory) const
{
    Cells cells;
    for (const auto &pair : memory.pairs()) {
        const Color flag = pair.guess[pair.guess.size() - 1];
        if (flag == 1 && !cells.storage)
            cells.storage = &pair;
        else if (flag == 0 && !cells.sampling)
            cells.sampling = &pair;
        else
            throw ContractViolationError("size-two: memory does not hold one storage and one "
                                         "sampling string");
    }
    if (!cells.storage || !cells.sampling)
        throw ContractViolationError("size-two: memory does not hold one storage and one "
                                     "sampling string");
    return cells;
}

CodeString SizeTwoStrategy::transition_guess(const CodeString &y, int answer_y,
                                             int next_block) const
{
    CodeString x(static_cast<std::size_t>(layout_.n), 0);
    write_entries(x, 1, binary_encode(next_block, layout_.ln));
    if (next_block <= layout_.num_blocks()) {
        const Block block = layout_.block(next_block);
        CodeString fragment = block_of(y, block);
        write_entries(x, layout_.ln + 1, fragment.entries());
        write_entries(x, layout_.ln + block.size() + 1, binary_encode(answer_y, layout_.ln));
        x[static_cast<std::size_t>(layout_.ln + block.size() + layout_.ln)] = 1;
        if (observer_)
            observer_->on_record_stored(next_block, fragment, answer_y);
    }
    x[static_cast<std::size_t>(layout_.n - 1)] = 1;
    return x;
}

CodeString SizeTwoStrategy::store_guess(const CodeString &x, const CodeString &y,
                                        int answer_y, int block) const
{
    const Block positions = layout_.block(block);
    const int p1 = last_one_pos(x, layout_.n - 1);
    CodeString out(static_cast<std::size_t>(layout_.n), 0);
    for (int pos = 1; pos <= p1; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = x[static_cast<std::size_t>(pos - 1)];
    CodeString fragment = block_of(y, positions);
    write_entries(out, p1 + 1, fragment.entries());
    write_entries(out, p1 + positions.size() + 1, binary_encode(answer_y, layout_.ln));
    out[static_cast<std::size_t>(p1 + positions.size() + layout_.ln)] = 1;
    out[static_cast<std::size_t>(layout_.n - 1)] = 1;
    if (observer_)
        observer_->on_record_stored(block, fragment, answer_y);
    return out;
}

CodeString SizeTwoStrategy::vary(const MemoryState &memory, RandomStream &rng) const
{
    if (layout_.degenerate)
        return linear_mode_vary(params_, memory, rng);

    const auto n = static_cast<std::size_t>(params_.n);
    if (memory.empty())
        return CodeString(n, 0); // first reference string
    if (memory.size() == 1) {
        CodeString x(n, 0); // storage string, flagged by its last entry
        x[n - 1] = 1;
        return x;
    }

    const Cells cells = split_cells(memory);
    const CodeString &x = cells.storage->guess;
    const CodeString &y = cells.sampling->guess;
    const int answer_y = cells.sampling->answer.black;
    const int i = block_index_size_two(x, layout_);
    const int num_blocks = layout_.num_blocks();

    if (i > num_blocks) {
        // endgame: only position n is open; try another color there
        return substitute_position(y, layout_.n,
                                   rng.color_excluding(params_.k, y[n - 1]));
    }

    const bool fresh = i == 0;
    const int q = fresh ? 0 : query_count_size_two(x, layout_);

    // A finished block is visible from memory alone: once all k reference
    // answers are stored, the sampling string's contribution is computable,
    // and contribution == block size means the block holds the secret.
    bool block_done = false;
    if (!fresh && q >= layout_.k) {
        const Block block = layout_.block(i);
        const int stride = layout_.record_stride(block.size());
        std::vector<int> refs;
        refs.reserve(static_cast<std::size_t>(layout_.k));
        for (int m = 1; m <= layout_.k; ++m) {
            const int first = layout_.ln + (m - 1) * stride + 1;
            refs.push_back(binary_decode(x, first + block.size(), layout_.ln));
        }
        const int delta = delta_contribution(answer_y, refs, block.size(), layout_.k);
        if (observer_)
            observer_->on_contribution(i, block_of(y, block), delta);
        block_done = delta == block.size();
    }

    if (fresh || block_done)
        return transition_guess(y, answer_y, i + 1);

    const int part = part_flag(y, answer_y, x, layout_);
    const Block block = layout_.block(i);

    if (part == 1 && q < layout_.t + layout_.k) {
        if (q < layout_.k)
            return substitute_block(y, block,
                                    CodeString(static_cast<std::size_t>(block.size()),
                                               static_cast<Color>(q)));
        return substitute_block(y, block,
                                CodeString(rng.fragment(static_cast<std::size_t>(block.size()),
                                                        params_.k)));
    }

    if (part == 0) {
        if (q >= layout_.t + layout_.k)
            throw LayoutCorruptionError("size-two: store requested on a full record region");
        return store_guess(x, y, answer_y, i);
    }

    // part == 1 and q == t + k: resolution from the reconstructed history
    SizeTwoHistory history = reconstruct_history_size_two(x, layout_);
    if (observer_)
        observer_->on_history_reconstructed(i, history.reference_answers, history.samples);
    BlockEvidence evidence;
    evidence.samples.reserve(history.samples.size());
    for (const auto &[fragment, answer] : history.samples) {
        const int delta =
            delta_contribution(answer, history.reference_answers, block.size(), layout_.k);
        if (observer_)
            observer_->on_contribution(i, fragment, delta);
        evidence.samples.push_back({fragment, delta});
    }
    auto candidates = consistent_fragments(evidence, block.size(), params_.k);
    if (candidates.empty())
        throw LayoutCorruptionError("size-two: consistent set is empty");
    const auto pick = static_cast<std::size_t>(rng.below(candidates.size()));
    return substitute_block(y, block, candidates[pick]);
}

MemoryState SizeTwoStrategy::select(const MemoryState &memory, const MemoryPair &incoming,
                                    RandomStream &rng) const
{
    if (layout_.degenerate)
        return linear_mode_select(params_, memory, incoming);
    (void)rng;

    MemoryState next(memory.capacity());
    if (memory.size() < 2) {
        for (const auto &pair : memory.pairs())
            next.push(pair);
        next.push(incoming);
        return next;
    }

    const Cells cells = split_cells(memory);
    const CodeString &x = cells.storage->guess;
    const int i = block_index_size_two(x, layout_);

    if (i > layout_.num_blocks()) {
        // endgame probes never enter memory; the game ends on a win
        next.push(*cells.sampling);
        next.push(*cells.storage);
        return next;
    }

    const Color flag = incoming.guess[incoming.guess.size() - 1];
    if (flag == 1) { // storage strings always replace the storage cell
        next.push(*cells.sampling);
        next.push(incoming);
        return next;
    }

    bool keep_new = true;
    if (i >= 1) {
        const int q = query_count_size_two(x, layout_);
        const int part =
            part_flag(cells.sampling->guess, cells.sampling->answer.black, x, layout_);
        if (q == layout_.t + layout_.k && part == 1) {
            // resolution draw: keep only a fully matching block
            const Block block = layout_.block(i);
            const int stride = layout_.record_stride(block.size());
            std::vector<int> refs;
            for (int m = 1; m <= layout_.k; ++m) {
                const int first = layout_.ln + (m - 1) * stride + 1;
                refs.push_back(binary_decode(x, first + block.size(), layout_.ln));
            }
            const int delta =
                delta_contribution(incoming.answer.black, refs, block.size(), layout_.k);
            if (observer_)
                observer_->on_contribution(i, block_of(incoming.guess, block), delta);
            keep_new = delta == block.size();
        }
    }

    next.push(keep_new ? incoming : *cells.sampling);
    next.push(*cells.storage);
    return next;
}

int SizeTwoStrategy::phase_of(const MemoryState &memory) const
{
    if (layout_.degenerate)
        return linear_mode_phase(params_, memory);
    if (memory.size() < 2)
        return 1;
    const Cells cells = split_cells(memory);
    return block_index_size_two(cells.storage->guess, layout_) > layout_.num_blocks() ? 3 : 1;
}

} // namespace mastermind
