#include "retwords/words.hpp"

#include <algorithm>
#include <sstream>

namespace retwords {

std::string word_str(const Word& w) {
    bool digits = std::all_of(w.begin(), w.end(), [](Symbol s) { return s >= 0 && s <= 9; });
    std::string out;
    if (digits) {
        out.reserve(w.size());
        for (Symbol s : w) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

Word parse_word(std::string_view text) {
    Word w;
    if (text.find(',') != std::string_view::npos) {
        std::string item;
        std::istringstream is{std::string(text)};
        while (std::getline(is, item, ',')) {
            try {
                w.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw Error(Errc::invalid_argument, "bad word symbol: '" + item + "'");
            }
        }
        return w;
    }
    w.reserve(text.size());
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        if (c < '0' || c > '9')
            throw Error(Errc::invalid_argument, std::string("bad word character: '") + c + "'");
        w.push_back(c - '0');
    }
    return w;
}

bool is_prefix(const Word& prefix, const Word& w) {
    if (prefix.size() > w.size()) return false;
    return std::equal(prefix.begin(), prefix.end(), w.begin());
}

Word shift_letters(const Word& w, Symbol delta) {
    Word out(w.size());
    std::transform(w.begin(), w.end(), out.begin(), [delta](Symbol s) { return s + delta; });
    return out;
}

SymbolSequence SymbolSequence::periodic(Word period, std::string name) {
    if (period.empty()) throw Error(Errc::invalid_argument, "empty period");
    return SymbolSequence(std::move(name),
                          [period = std::move(period)](std::vector<Symbol>& buf, std::size_t want) {
                              while (buf.size() < want)
                                  buf.push_back(period[buf.size() % period.size()]);
                          });
}

Symbol SymbolSequence::at(std::size_t i) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->memo.size() <= i) state_->extend(state_->memo, i + 1);
    return state_->memo[i];
}

std::vector<Symbol> SymbolSequence::prefix(std::size_t n) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->memo.size() < n) state_->extend(state_->memo, n);
    return {state_->memo.begin(), state_->memo.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace retwords
