#include "bosonorder/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "bosonorder/errors.hpp"

namespace bosonorder {

long long excess(const Word& w) {
    long long d = 0;
    for (Generator g : w) d += (g == Generator::kCreate) ? 1 : -1;
    return d;
}

void NormalForm::add(NormalMonomial key, Rat coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, std::move(coeff));
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

NormalForm& NormalForm::operator+=(const NormalForm& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, coeff);
    return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, -coeff);
    return *this;
}

NormalForm& NormalForm::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= scalar;
    return *this;
}

std::string NormalForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (coeff != 1 || (key.creators == 0 && key.annihilators == 0)) os << coeff;
        if (coeff != 1 && (key.creators > 0 || key.annihilators > 0)) os << " ";
        if (key.creators > 0) {
            os << "ad";
            if (key.creators > 1) os << "^" << key.creators;
        }
        if (key.creators > 0 && key.annihilators > 0) os << " ";
        if (key.annihilators > 0) {
            os << "a";
            if (key.annihilators > 1) os << "^" << key.annihilators;
        }
    }
    return os.str();
}

namespace {

// #(annihilator, creator) pairs in wrong order; the rewrite strictly
// decreases (length, inversions) lexicographically, which both proves
// termination and lets the worklist below pop words in an order where each
// word is fully merged before it is rewritten.
std::size_t inversions(const Word& w) {
    std::size_t annihilators_seen = 0;
    std::size_t count = 0;
    for (Generator g : w) {
        if (g == Generator::kAnnihilate) {
            ++annihilators_seen;
        } else {
            count += annihilators_seen;
        }
    }
    return count;
}

struct WorkKey {
    std::size_t length;
    std::size_t inversions;
    Word word;

    // Largest (length, inversions) first; word content only as tiebreak.
    bool operator<(const WorkKey& other) const {
        if (length != other.length) return length > other.length;
        if (inversions != other.inversions) return inversions > other.inversions;
        return word < other.word;
    }
};

}  // namespace

NormalForm normal_order(const Word& w) {
    NormalForm result;
    std::map<WorkKey, Rat> pending;
    pending.emplace(WorkKey{w.size(), inversions(w), w}, Rat(1));

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& word = node.key().word;
        const Rat& coeff = node.mapped();

        std::size_t redex = word.size();  // leftmost "a ad" position
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] == Generator::kAnnihilate && word[i + 1] == Generator::kCreate) {
                redex = i;
                break;
            }
        }

        if (redex == word.size()) {
            unsigned creators = 0;
            for (Generator g : word) {
                if (g == Generator::kCreate) ++creators;
            }
            result.add({creators, static_cast<unsigned>(word.size()) - creators}, coeff);
            continue;
        }

        auto push = [&](Word&& next) {
            WorkKey key{next.size(), inversions(next), std::move(next)};
            auto [it, inserted] = pending.try_emplace(std::move(key), coeff);
            if (!inserted) it->second += coeff;
        };

        Word swapped = word;
        std::swap(swapped[redex], swapped[redex + 1]);
        push(std::move(swapped));

        Word contracted = word;
        contracted.erase(contracted.begin() + redex, contracted.begin() + redex + 2);
        push(std::move(contracted));
    }
    return result;
}

NormalForm multiply(const NormalForm& lhs, const NormalForm& rhs) {
    NormalForm out;
    for (const auto& [lk, lc] : lhs.terms()) {
        for (const auto& [rk, rc] : rhs.terms()) {
            // (ad)^r1 a^s1 (ad)^r2 a^s2: contract the middle pair.
            const unsigned s1 = lk.annihilators;
            const unsigned r2 = rk.creators;
            const Rat cross = lc * rc;
            const unsigned top = std::min(r2, s1);
            for (unsigned i = 0; i <= top; ++i) {
                Rat weight(binomial(s1, i) * falling_factorial(static_cast<long long>(r2), i));
                out.add({lk.creators + r2 - i, s1 - i + rk.annihilators}, cross * weight);
            }
        }
    }
    return out;
}

NormalForm power(const NormalForm& nf, unsigned n) {
    NormalForm acc = NormalForm::identity();
    for (unsigned i = 0; i < n; ++i) acc = multiply(acc, nf);
    return acc;
}

HomogeneousPoly::HomogeneousPoly(unsigned excess, std::map<unsigned, Rat> coeffs)
    : excess_(excess), coeffs_(std::move(coeffs)) {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
    if (coeffs_.empty()) {
        throw OutOfRangeError("homogeneous polynomial needs at least one nonzero coefficient");
    }
}

NormalForm HomogeneousPoly::normal_form() const {
    NormalForm nf;
    for (const auto& [k, alpha] : coeffs_) nf.add({excess_ + k, k}, alpha);
    return nf;
}

HomogeneousPoly extract_homogeneous(const NormalForm& nf) {
    if (nf.is_zero()) {
        throw OutOfRangeError("cannot extract homogeneous data from the zero operator");
    }
    long long d = 0;
    bool have_d = false;
    std::map<unsigned, Rat> coeffs;
    for (const auto& [key, coeff] : nf.terms()) {
        long long term_excess =
            static_cast<long long>(key.creators) - static_cast<long long>(key.annihilators);
        if (!have_d) {
            d = term_excess;
            have_d = true;
        } else if (term_excess != d) {
            throw MixedExcessError("terms carry different excesses (" + std::to_string(d) +
                                   " vs " + std::to_string(term_excess) + ")");
        }
        coeffs.emplace(key.annihilators, coeff);
    }
    if (d < 0) {
        throw NegativeExcessError("excess " + std::to_string(d) +
                                  " is negative; only nonnegative excess is supported");
    }
    return HomogeneousPoly(static_cast<unsigned>(d), std::move(coeffs));
}

}  // namespace bosonorder
