#include "retwords/morphisms.hpp"

namespace retwords {

Morphism::Morphism(std::map<Symbol, Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error(Errc::invalid_argument, "morphism with empty alphabet");
    for (const auto& [letter, image] : images_) {
        if (image.empty())
            throw Error(Errc::invalid_argument,
                        "image of letter " + std::to_string(letter) + " is empty");
        for (Symbol s : image) {
            if (!images_.count(s))
                throw Error(Errc::invalid_argument,
                            "image letter " + std::to_string(s) + " is outside the alphabet");
        }
    }
}

const Word& Morphism::image(Symbol s) const {
    auto it = images_.find(s);
    if (it == images_.end())
        throw Error(Errc::invalid_argument, "letter " + std::to_string(s) + " not in alphabet");
    return it->second;
}

std::set<Symbol> Morphism::alphabet() const {
    std::set<Symbol> out;
    for (const auto& [letter, image] : images_) out.insert(letter);
    return out;
}

Word Morphism::apply(const Word& w) const {
    Word out;
    for (Symbol s : w) {
        const Word& img = image(s);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

bool Morphism::prolongable(Symbol seed) const {
    auto it = images_.find(seed);
    return it != images_.end() && it->second.size() >= 2 && it->second.front() == seed;
}

namespace {

// buf is a prefix of the fixed point; keep appending sigma(buf[next]).
// Works because x = sigma(x_0) sigma(x_1) ... and |buf| > next throughout.
void extend_fixed_point(const Morphism& m, Symbol seed, std::vector<Symbol>& buf,
                        std::size_t& next, std::size_t want) {
    if (buf.empty()) {
        const Word& img = m.image(seed);
        buf.insert(buf.end(), img.begin(), img.end());
        next = 1;
    }
    while (buf.size() < want) {
        const Word& img = m.image(buf[next]);
        buf.insert(buf.end(), img.begin(), img.end());
        ++next;
    }
}

}  // namespace

Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t len) {
    if (!m.prolongable(seed))
        throw Error(Errc::invalid_argument,
                    "letter " + std::to_string(seed) + " is not prolongable under the morphism");
    Word buf;
    std::size_t next = 0;
    extend_fixed_point(m, seed, buf, next, len);
    buf.resize(len);
    return buf;
}

SymbolSequence fixed_point_sequence(const Morphism& m, Symbol seed, std::string name) {
    if (!m.prolongable(seed))
        throw Error(Errc::invalid_argument,
                    "letter " + std::to_string(seed) + " is not prolongable under the morphism");
    return SymbolSequence(std::move(name),
                          [m, seed, next = std::size_t{0}](std::vector<Symbol>& buf,
                                                           std::size_t want) mutable {
                              extend_fixed_point(m, seed, buf, next, want);
                          });
}

}  // namespace retwords
