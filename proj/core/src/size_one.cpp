#include "mastermind/strategies/size_one.hpp"

#include "mastermind/consistent.hpp"
#include "mastermind/errors.hpp"
#include "mastermind/strategies/linalg.hpp"

namespace mastermind {

SizeOneStrategy::SizeOneStrategy(GameParams params, LayoutParams layout)
  : params_(params), layout_(std::move(layout))
{
    params_.validate();
    if (layout_.kind != LayoutKind::size_one)
        throw std::invalid_argument("SizeOneStrategy: layout kind mismatch");
    if (layout_.n != params_.n || layout_.k != params_.k)
        throw std::invalid_argument("SizeOneStrategy: layout dimensions mismatch");
    if (params_.n < 4)
        throw std::invalid_argument("SizeOneStrategy: n must be at least 4");
}

SizeOneStrategy SizeOneStrategy::with_default_layout(GameParams params, double eps,
                                                     double big_k)
{
    return SizeOneStrategy(params, LayoutParams::size_one(params, eps, big_k));
}

SizeOnePhase SizeOneStrategy::classify(const MemoryState &memory) const
{
    if (memory.empty())
        return SizeOnePhase::init;
    const CodeString &x = memory.pair(0).guess;
    const auto n = static_cast<std::size_t>(params_.n);
    const Color tail1 = x[n - 2];
    const Color tail2 = x[n - 1];

    if (layout_.degenerate) {
        if (tail1 != tail2)
            throw ContractViolationError("size-one: mixed suffix in linear mode");
        const int tn = tail_number(x);
        return tn <= params_.n - 2 ? SizeOnePhase::lin_alg : SizeOnePhase::endgame;
    }

    if (tail1 == tail2) {
        const int tn = tail_number(x);
        if (tn <= layout_.l)
            return SizeOnePhase::prefix_lin_alg;
        if (tn == layout_.l + 1)
            return SizeOnePhase::intermediate;
        if (tn > layout_.l + layout_.b * layout_.s && tn <= params_.n - 2)
            return SizeOnePhase::lin_alg;
        if (tn == params_.n - 1)
            return SizeOnePhase::endgame;
        throw ContractViolationError("size-one: tail number outside every phase");
    }
    if (tail1 == 0 && tail2 == 1) {
        const int i = block_index_size_one(x, layout_);
        if (i >= 1 && i <= layout_.b) {
            const int q = query_count_size_one(x, layout_);
            return q == layout_.t + layout_.k ? SizeOnePhase::optimize
                                              : SizeOnePhase::sampling;
        }
        if (i == layout_.b + 1)
            return SizeOnePhase::phase_two_prep;
        throw ContractViolationError("size-one: block counter out of range");
    }
    throw ContractViolationError("size-one: unrecognized suffix");
}

CodeString SizeOneStrategy::prefix_copy(const CodeString &x) const
{
    const int first = layout_.prefix_copy_first();
    return block_of(x, Block{first, first + layout_.l - 1});
}

int SizeOneStrategy::prefix_contribution(const CodeString &x,
                                         const std::vector<Color> &first_l) const
{
    const CodeString copy = prefix_copy(x);
    int count = 0;
    for (int i = 0; i < layout_.l; ++i)
        count += (copy[static_cast<std::size_t>(i)] == first_l[static_cast<std::size_t>(i)]);
    return count;
}

int SizeOneStrategy::reference_baseline(const CodeString &x, int block_index) const
{
    const int k = layout_.k;
    const int ln = layout_.ln;
    const int l = layout_.l;
    const int s = layout_.s;

    // reference records: (answer before ref guess c, answer of ref guess c)
    std::vector<int> before(static_cast<std::size_t>(k - 1));
    std::vector<int> ref_answer(static_cast<std::size_t>(k - 1));
    for (int c = 1; c <= k - 1; ++c) {
        const int first = layout_.refs_first() + (c - 1) * layout_.ref_record_width();
        before[static_cast<std::size_t>(c - 1)] = binary_decode(x, first, ln);
        ref_answer[static_cast<std::size_t>(c - 1)] = binary_decode(x, first + ln, ln);
        if (x[static_cast<std::size_t>(first + 2 * ln - 1)] != 1)
            throw LayoutCorruptionError("size-one: reference record marker missing");
    }
    const int entry_answer = before[0]; // reply to the block-entry string

    // prefix terms: the entry string carries zeros, reference guess c
    // carries [1 | binary(answer before it)]
    std::vector<Color> zeros(static_cast<std::size_t>(l), 0);
    long long sum_ref_answers = 0;
    long long sum_ref_prefix = 0;
    long long sum_drift = 0;
    for (int c = 1; c <= k - 1; ++c) {
        std::vector<Color> first_l(static_cast<std::size_t>(l), 0);
        first_l[0] = 1;
        auto field = binary_encode(before[static_cast<std::size_t>(c - 1)], ln);
        for (int j = 0; j < ln; ++j)
            first_l[static_cast<std::size_t>(1 + j)] = field[static_cast<std::size_t>(j)];
        sum_ref_prefix += prefix_contribution(x, first_l);
        sum_ref_answers += ref_answer[static_cast<std::size_t>(c - 1)];
        sum_drift += before[static_cast<std::size_t>(c - 1)] - entry_answer;
    }

    const long long numerator = entry_answer + sum_ref_answers -
                                prefix_contribution(x, zeros) - sum_ref_prefix -
                                static_cast<long long>(k) * (block_index - 1) * s - s -
                                sum_drift;
    if (numerator % k != 0)
        throw LayoutCorruptionError("size-one: reference baseline not divisible by k");
    return static_cast<int>(numerator / k);
}

int SizeOneStrategy::sample_delta(const CodeString &sample, int answer,
                                  int block_index) const
{
    const int entry_answer =
        binary_decode(sample, layout_.refs_first(), layout_.ln); // reply to block entry
    const int prev_answer = binary_decode(sample, 2, layout_.ln);
    const int rho = reference_baseline(sample, block_index);
    std::vector<Color> first_l(sample.entries().begin(),
                               sample.entries().begin() + layout_.l);
    const long long delta = answer - prefix_contribution(sample, first_l) -
                            static_cast<long long>(block_index - 1) * layout_.s - rho -
                            (prev_answer - entry_answer);
    if (delta < 0 || delta > layout_.s)
        throw LayoutCorruptionError("size-one: sample contribution out of range");
    return static_cast<int>(delta);
}

CodeString SizeOneStrategy::intermediate_guess(const CodeString &x) const
{
    CodeString out(static_cast<std::size_t>(layout_.n), 0);
    std::vector<Color> first_l(x.entries().begin(), x.entries().begin() + layout_.l);
    write_entries(out, layout_.prefix_copy_first(), first_l);
    write_entries(out, layout_.counter_first(), binary_encode(1, layout_.ls));
    out[static_cast<std::size_t>(layout_.n - 1)] = 1; // suffix [0 1]
    return out;
}

CodeString SizeOneStrategy::sample_type_guess(const CodeString &store, int answer,
                                              const CodeString &fragment,
                                              int block_index) const
{
    CodeString out = store;
    out[0] = 1;
    write_entries(out, 2, binary_encode(answer, layout_.ln));
    const Block block = layout_.block(block_index);
    for (int j = 0; j < block.size(); ++j)
        out[static_cast<std::size_t>(block.first - 1 + j)] = fragment[static_cast<std::size_t>(j)];
    return out;
}

CodeString SizeOneStrategy::store_reference_guess(const CodeString &sample, int answer,
                                                  int slot) const
{
    CodeString out = sample;
    for (int pos = 1; pos <= layout_.l; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = 0;
    const Block block = layout_.block(block_index_size_one(sample, layout_));
    for (int pos = block.first; pos <= block.last; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = 0;

    const int first = layout_.refs_first() + (slot - 1) * layout_.ref_record_width();
    // (answer stored in the sample's reply field, answer just received)
    std::vector<Color> record;
    auto prev = binary_decode(sample, 2, layout_.ln);
    auto prev_bits = binary_encode(prev, layout_.ln);
    auto answer_bits = binary_encode(answer, layout_.ln);
    record.insert(record.end(), prev_bits.begin(), prev_bits.end());
    record.insert(record.end(), answer_bits.begin(), answer_bits.end());
    record.push_back(1);
    write_entries(out, first, record);
    return out;
}

CodeString SizeOneStrategy::store_record_guess(const CodeString &sample, int answer,
                                               int block_index) const
{
    const int delta = sample_delta(sample, answer, block_index);
    const Block block = layout_.block(block_index);
    CodeString fragment = block_of(sample, block);
    if (observer_) {
        observer_->on_contribution(block_index, fragment, delta);
        observer_->on_record_stored(block_index, fragment, delta);
    }

    CodeString out = sample;
    for (int pos = 1; pos <= layout_.l; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = 0;
    for (int pos = block.first; pos <= block.last; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = 0;

    const int q = query_count_size_one(sample, layout_);
    const int slot = q - layout_.k + 1; // 1-based sample record index
    const int first = layout_.records_first() + (slot - 1) * layout_.sample_record_width();
    std::vector<Color> record;
    auto prev_bits = binary_encode(binary_decode(sample, 2, layout_.ln), layout_.ln);
    record.insert(record.end(), prev_bits.begin(), prev_bits.end());
    record.insert(record.end(), fragment.entries().begin(), fragment.entries().end());
    auto delta_bits = binary_encode(delta, layout_.ls);
    record.insert(record.end(), delta_bits.begin(), delta_bits.end());
    record.push_back(1);
    write_entries(out, first, record);
    return out;
}

CodeString SizeOneStrategy::update_guess(const CodeString &winner, int block_index) const
{
    CodeString out(static_cast<std::size_t>(layout_.n), 0);
    // keep the determined blocks (including the one just finished) and the
    // prefix copy; clear every record
    const Block determined{layout_.l + 1, layout_.l + block_index * layout_.s};
    for (int pos = determined.first; pos <= determined.last; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = winner[static_cast<std::size_t>(pos - 1)];
    const int pc = layout_.prefix_copy_first();
    for (int pos = pc; pos < pc + layout_.l; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = winner[static_cast<std::size_t>(pos - 1)];
    write_entries(out, layout_.counter_first(), binary_encode(block_index + 1, layout_.ls));
    out[static_cast<std::size_t>(layout_.n - 1)] = 1; // suffix [0 1]
    return out;
}

CodeString SizeOneStrategy::prep_guess(const CodeString &x, RandomStream &rng) const
{
    const int l = layout_.l;
    const int bs = layout_.b * layout_.s;
    CodeString out(static_cast<std::size_t>(layout_.n), 0);
    const CodeString copy = prefix_copy(x);
    write_entries(out, 1, copy.entries());
    for (int pos = l + 1; pos <= l + bs; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = x[static_cast<std::size_t>(pos - 1)];
    const Color boundary = x[static_cast<std::size_t>(l + bs - 1)];
    const Color tail = rng.color_excluding(params_.k, boundary);
    for (int pos = l + bs + 1; pos <= layout_.n; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = tail;
    return out;
}

CodeString SizeOneStrategy::resolution_guess(const CodeString &store, int block_index,
                                             RandomStream &rng) const
{
    const int stride = layout_.sample_record_width();
    BlockEvidence evidence;
    std::vector<std::pair<CodeString, int>> records;
    std::vector<int> reference_answers;
    for (int c = 1; c <= layout_.k - 1; ++c) {
        const int first = layout_.refs_first() + (c - 1) * layout_.ref_record_width();
        if (c == 1)
            reference_answers.push_back(binary_decode(store, first, layout_.ln));
        reference_answers.push_back(binary_decode(store, first + layout_.ln, layout_.ln));
    }
    for (int j = 1; j <= layout_.t; ++j) {
        const int first = layout_.records_first() + (j - 1) * stride;
        CodeString fragment =
            block_of(store, Block{first + layout_.ln, first + layout_.ln + layout_.s - 1});
        const int delta = binary_decode(store, first + layout_.ln + layout_.s, layout_.ls);
        if (store[static_cast<std::size_t>(first + stride - 2)] != 1)
            throw LayoutCorruptionError("size-one: sample record marker missing");
        evidence.samples.push_back({fragment, delta});
        records.emplace_back(std::move(fragment), delta);
    }
    if (observer_)
        observer_->on_history_reconstructed(block_index, reference_answers, records);

    auto candidates = consistent_fragments(evidence, layout_.s, params_.k);
    if (candidates.empty())
        throw LayoutCorruptionError("size-one: consistent set is empty");
    const auto pick = static_cast<std::size_t>(rng.below(candidates.size()));

    CodeString out = store;
    for (int pos = 1; pos <= layout_.l; ++pos)
        out[static_cast<std::size_t>(pos - 1)] = 1;
    const Block block = layout_.block(block_index);
    for (int j = 0; j < block.size(); ++j)
        out[static_cast<std::size_t>(block.first - 1 + j)] =
            candidates[pick][static_cast<std::size_t>(j)];
    return out;
}

CodeString SizeOneStrategy::vary(const MemoryState &memory, RandomStream &rng) const
{
    if (memory.empty())
        return CodeString(static_cast<std::size_t>(params_.n), rng.color(params_.k));
    if (layout_.degenerate)
        return linear_mode_vary(params_, memory, rng);

    const CodeString &x = memory.pair(0).guess;
    const int answer = memory.pair(0).answer.black;

    switch (classify(memory)) {
    case SizeOnePhase::init:
        break;
    case SizeOnePhase::prefix_lin_alg:
    case SizeOnePhase::lin_alg:
        return lin_alg_vary(x, params_.k, rng);
    case SizeOnePhase::intermediate:
        return intermediate_guess(x);
    case SizeOnePhase::sampling: {
        const int i = block_index_size_one(x, layout_);
        const int q = query_count_size_one(x, layout_);
        const Block block = layout_.block(i);
        if (x[0] == 0) { // a store string sits in memory: issue a probe
            if (q == 0)
                return sample_type_guess(
                    x, answer, CodeString(static_cast<std::size_t>(block.size()), 1), i);
            if (q < layout_.k)
                return sample_type_guess(
                    x, answer,
                    CodeString(static_cast<std::size_t>(block.size()), static_cast<Color>(q)),
                    i);
            return sample_type_guess(
                x, answer,
                CodeString(rng.fragment(static_cast<std::size_t>(block.size()), params_.k)),
                i);
        }
        // a probe sits in memory: write it into storage
        if (q < layout_.k)
            return store_reference_guess(x, answer, q);
        return store_record_guess(x, answer, i);
    }
    case SizeOnePhase::optimize: {
        const int i = block_index_size_one(x, layout_);
        if (x[0] == 0)
            return resolution_guess(x, i, rng);
        return update_guess(x, i);
    }
    case SizeOnePhase::phase_two_prep:
        return prep_guess(x, rng);
    case SizeOnePhase::endgame:
        return linear_mode_vary(params_, memory, rng);
    }
    throw ContractViolationError("size-one: vary reached an impossible state");
}

MemoryState SizeOneStrategy::select(const MemoryState &memory, const MemoryPair &incoming,
                                    RandomStream &rng) const
{
    (void)rng;
    if (memory.empty()) {
        MemoryState next(memory.capacity());
        next.push(incoming);
        return next;
    }
    if (layout_.degenerate)
        return linear_mode_select(params_, memory, incoming);

    const CodeString &x = memory.pair(0).guess;
    const int answer = memory.pair(0).answer.black;
    bool keep_new = true;

    switch (classify(memory)) {
    case SizeOnePhase::init:
        break;
    case SizeOnePhase::prefix_lin_alg:
    case SizeOnePhase::lin_alg:
        keep_new = lin_alg_keep(x, answer, incoming.guess, incoming.answer.black, params_.k);
        break;
    case SizeOnePhase::optimize:
        if (x[0] == 0) {
            // resolution draw: keep only a fully matching block
            const int i = block_index_size_one(x, layout_);
            const int entry_answer = binary_decode(x, layout_.refs_first(), layout_.ln);
            const int rho = reference_baseline(x, i);
            const std::vector<Color> ones(static_cast<std::size_t>(layout_.l), 1);
            const long long delta = incoming.answer.black -
                                    prefix_contribution(x, ones) -
                                    static_cast<long long>(i - 1) * layout_.s - rho -
                                    (answer - entry_answer);
            if (delta < 0 || delta > layout_.s)
                throw LayoutCorruptionError("size-one: resolution contribution out of range");
            if (observer_)
                observer_->on_contribution(
                    i, block_of(incoming.guess, layout_.block(i)), static_cast<int>(delta));
            keep_new = delta == layout_.s;
        }
        break;
    case SizeOnePhase::endgame:
        keep_new = incoming.answer.black == params_.n;
        break;
    case SizeOnePhase::intermediate:
    case SizeOnePhase::sampling:
    case SizeOnePhase::phase_two_prep:
        break; // unconditional replacement
    }

    MemoryState next(memory.capacity());
    next.push(keep_new ? incoming : memory.pair(0));
    return next;
}

int SizeOneStrategy::phase_of(const MemoryState &memory) const
{
    if (memory.empty())
        return 0;
    if (layout_.degenerate)
        return linear_mode_phase(params_, memory);
    switch (classify(memory)) {
    case SizeOnePhase::init:
    case SizeOnePhase::prefix_lin_alg:
        return 0;
    case SizeOnePhase::intermediate:
    case SizeOnePhase::sampling:
    case SizeOnePhase::optimize:
        return 1;
    case SizeOnePhase::phase_two_prep:
    case SizeOnePhase::lin_alg:
        return 2;
    case SizeOnePhase::endgame:
        return 3;
    }
    return 1;
}

} // namespace mastermind
