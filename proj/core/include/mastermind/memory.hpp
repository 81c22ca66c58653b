// memory.hpp -- the bounded store of (guess, answer) pairs

#pragma once

#include "mastermind/errors.hpp"
#include "mastermind/types.hpp"

#include <cstddef>
#include <vector>

namespace mastermind {

struct MemoryPair {
    CodeString guess;
    Answer answer;

    bool operator==(const MemoryPair &) const = default;
};

/// Ordered sequence of at most `capacity` pairs.  This is the ONLY state a
/// strategy may read between queries.
class MemoryState {
public:
    explicit MemoryState(std::size_t capacity) : capacity_(capacity)
    {
        if (capacity == 0)
            throw std::invalid_argument("MemoryState: capacity must be at least 1");
    }

    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }

    const MemoryPair &pair(std::size_t i) const { return pairs_.at(i); }
    const std::vector<MemoryPair> &pairs() const noexcept { return pairs_; }

    void push(MemoryPair pair)
    {
        if (pairs_.size() >= capacity_)
            throw ContractViolationError("MemoryState: capacity exceeded");
        pairs_.push_back(std::move(pair));
    }

private:
    std::size_t capacity_;
    std::vector<MemoryPair> pairs_;
};

} // namespace mastermind
