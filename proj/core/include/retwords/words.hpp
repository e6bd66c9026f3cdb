#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "retwords/errors.hpp"

namespace retwords {

using Symbol = int;
using Word = std::vector<Symbol>;

/// "0100" for alphabets that fit single digits, "10,2,11" otherwise.
std::string word_str(const Word& w);
Word parse_word(std::string_view text);

bool is_prefix(const Word& prefix, const Word& w);

/// Applies symbol -> symbol + delta (letter relabelling between conventions).
Word shift_letters(const Word& w, Symbol delta);

/**
 * A deterministic one-sided infinite word, produced on demand.
 *
 * Symbols are memoized: extending the prefix reuses everything generated so
 * far, and concurrent readers observe identical symbols (the memo is guarded
 * by a mutex). Sources: IET codings, rotation codings, morphism fixed points,
 * explicit periodic words.
 */
class SymbolSequence {
public:
    // Extender appends symbols to buf until buf.size() >= want.
    using Extender = std::function<void(std::vector<Symbol>& buf, std::size_t want)>;

    SymbolSequence(std::string name, Extender extend)
        : state_(std::make_shared<State>()), name_(std::move(name)) {
        state_->extend = std::move(extend);
    }

    static SymbolSequence periodic(Word period, std::string name = "periodic");

    const std::string& name() const { return name_; }

    Symbol at(std::size_t i) const;

    /// First n symbols as a fresh vector.
    std::vector<Symbol> prefix(std::size_t n) const;

private:
    struct State {
        std::mutex mu;
        std::vector<Symbol> memo;
        Extender extend;
    };

    // Shared so copies of the sequence share one memo.
    std::shared_ptr<State> state_;
    std::string name_;
};

}  // namespace retwords
