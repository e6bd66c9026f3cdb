#pragma once

#include <map>
#include <set>

#include "retwords/words.hpp"

namespace retwords {

/// A substitution: letter -> nonempty word over the same alphabet.
class Morphism {
public:
    explicit Morphism(std::map<Symbol, Word> images);

    const std::map<Symbol, Word>& images() const { return images_; }
    const Word& image(Symbol s) const;
    std::set<Symbol> alphabet() const;

    Word apply(const Word& w) const;

    /// sigma(seed) starts with seed and has length >= 2.
    bool prolongable(Symbol seed) const;

private:
    std::map<Symbol, Word> images_;
};

/// First `len` letters of the unique fixed point starting with `seed`.
Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t len);

/// The fixed point as an on-demand sequence (prefix-stable streaming).
SymbolSequence fixed_point_sequence(const Morphism& m, Symbol seed, std::string name = "morphism");

}  // namespace retwords
