#pragma once

// Finite groups as full multiplication tables, with the dihedral groups D_m and
// the symmetric groups S_n as named constructions.
//
// Permutations compose right-to-left: (s * t)(x) = s(t(x)).

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pointed/errors.hpp"

namespace pointed {

struct GroupElt {
    int index = 0;
    friend bool operator==(GroupElt a, GroupElt b) { return a.index == b.index; }
    friend bool operator!=(GroupElt a, GroupElt b) { return a.index != b.index; }
    friend bool operator<(GroupElt a, GroupElt b) { return a.index < b.index; }
};

class FinGroup {
public:
    enum class Kind { Dihedral, Symmetric, Other };

    int order() const noexcept { return static_cast<int>(mult_.size()); }
    GroupElt identity() const noexcept { return {identity_}; }
    GroupElt mul(GroupElt a, GroupElt b) const { return {mult_[a.index][b.index]}; }
    GroupElt inv(GroupElt a) const { return {inv_[a.index]}; }
    GroupElt conj(GroupElt x, GroupElt y) const { return mul(mul(x, y), inv(x)); }  // x y x^-1
    GroupElt pow(GroupElt a, long long k) const {
        GroupElt base = k < 0 ? inv(a) : a;
        long long e = k < 0 ? -k : k;
        GroupElt r = identity();
        for (long long i = 0; i < e; ++i) r = mul(r, base);
        return r;
    }
    GroupElt element(int index) const {
        if (index < 0 || index >= order()) throw ValidationError("bad_element", "group element index out of range");
        return {index};
    }
    std::vector<GroupElt> elements() const {
        std::vector<GroupElt> out(order());
        for (int i = 0; i < order(); ++i) out[i] = {i};
        return out;
    }

    const std::string& label(GroupElt a) const { return labels_.at(a.index); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    GroupElt parse(const std::string& label) const {
        for (int i = 0; i < order(); ++i) {
            if (labels_[i] == label) return {i};
        }
        throw ValidationError("bad_element", "unknown group element '" + label + "'");
    }

    /// Generators used for invariance checks: g, h for D_m; adjacent transpositions for S_n.
    const std::vector<GroupElt>& generators() const noexcept { return generators_; }

    Kind kind() const noexcept { return kind_; }
    /// m for D_m, n for S_n.
    int parameter() const noexcept { return parameter_; }
    std::string name() const {
        switch (kind_) {
            case Kind::Dihedral: return "D" + std::to_string(parameter_);
            case Kind::Symmetric: return "S" + std::to_string(parameter_);
            default: return "G" + std::to_string(order());
        }
    }

    // Dihedral accessors: element index a*m + b stands for g^a h^b.
    GroupElt dihedral(int a, long long b) const {
        require(Kind::Dihedral);
        int m = parameter_;
        return {(a & 1) * m + static_cast<int>(((b % m) + m) % m)};
    }
    std::pair<int, int> dihedral_parts(GroupElt x) const {
        require(Kind::Dihedral);
        return {x.index / parameter_, x.index % parameter_};
    }

    // Symmetric accessors: images are 0-based, perm[x] = image of x.
    const std::vector<int>& perm(GroupElt x) const {
        require(Kind::Symmetric);
        return perms_.at(x.index);
    }
    GroupElt from_perm(const std::vector<int>& p) const {
        require(Kind::Symmetric);
        auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
        if (it == perms_.end() || *it != p) throw ValidationError("bad_element", "not a permutation of the right size");
        return {static_cast<int>(it - perms_.begin())};
    }

    const std::vector<std::vector<int>>& table() const noexcept { return mult_; }

    /// Exhaustive axiom check (associativity over all triples, inverses, identity).
    bool satisfies_axioms() const {
        int n = order();
        for (int a = 0; a < n; ++a) {
            if (mult_[identity_][a] != a || mult_[a][identity_] != a) return false;
            if (mult_[a][inv_[a]] != identity_ || mult_[inv_[a]][a] != identity_) return false;
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]]) return false;
        }
        return true;
    }

    friend std::shared_ptr<const FinGroup> dihedral(int m);
    friend std::shared_ptr<const FinGroup> symmetric(int n);

private:
    void require(Kind k) const {
        if (kind_ != k) throw ValidationError("wrong_group", "operation not available for group " + name());
    }
    void finish_inverses() {
        int n = order();
        inv_.assign(n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (mult_[a][b] == identity_) inv_[a] = b;
    }

    Kind kind_ = Kind::Other;
    int parameter_ = 0;
    int identity_ = 0;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::vector<GroupElt> generators_;
    std::vector<std::vector<int>> perms_;
};

using GroupPtr = std::shared_ptr<const FinGroup>;

/// D_m = <g, h | g^2 = 1 = h^m, g h g = h^{-1}>, order 2m.
inline GroupPtr dihedral(int m) {
    if (m < 3) throw ValidationError("bad_group", "dihedral group needs m >= 3");
    auto G = std::make_shared<FinGroup>();
    G->kind_ = FinGroup::Kind::Dihedral;
    G->parameter_ = m;
    int n = 2 * m;
    G->mult_.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        int a = x / m, b = x % m;
        for (int y = 0; y < n; ++y) {
            int c = y / m, d = y % m;
            // g^a h^b g^c h^d = g^{a+c} h^{(-1)^c b + d}
            int e = (c ? -b : b) + d;
            e = ((e % m) + m) % m;
            G->mult_[x][y] = ((a + c) & 1) * m + e;
        }
    }
    G->identity_ = 0;
    G->labels_.resize(n);
    for (int x = 0; x < n; ++x) {
        int a = x / m, b = x % m;
        std::string hb = b == 0 ? "" : (b == 1 ? "h" : "h^" + std::to_string(b));
        if (a == 0) {
            G->labels_[x] = b == 0 ? "e" : hb;
        } else {
            G->labels_[x] = "g" + hb;
        }
    }
    G->generators_ = {GroupElt{m}, GroupElt{1}};
    G->finish_inverses();
    return G;
}

namespace detail {

/// Cycle notation with 1-based points, smallest point first in each cycle; "e" for identity.
inline std::string cycle_label(const std::vector<int>& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s] || p[s] == static_cast<int>(s)) {
            seen[s] = true;
            continue;
        }
        out += "(";
        for (std::size_t x = s; !seen[x]; x = p[x]) {
            seen[x] = true;
            out += std::to_string(x + 1);
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

}  // namespace detail

/// S_n for 2 <= n <= 6; elements are permutations in lexicographic order of their images.
inline GroupPtr symmetric(int n) {
    if (n < 2 || n > 6) throw ValidationError("bad_group", "symmetric group supported for 2 <= n <= 6");
    auto G = std::make_shared<FinGroup>();
    G->kind_ = FinGroup::Kind::Symmetric;
    G->parameter_ = n;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        G->perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int N = static_cast<int>(G->perms_.size());
    G->mult_.assign(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = G->perms_[a][G->perms_[b][x]];
            G->mult_[a][b] = static_cast<int>(
                std::lower_bound(G->perms_.begin(), G->perms_.end(), c) - G->perms_.begin());
        }
    }
    G->identity_ = 0;
    for (const auto& q : G->perms_) G->labels_.push_back(detail::cycle_label(q));
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[i], t[i + 1]);
        G->generators_.push_back(G->from_perm(t));
    }
    G->finish_inverses();
    return G;
}

/// Conjugacy class of x, sorted by element index.
inline std::vector<GroupElt> conjugacy_class(const FinGroup& G, GroupElt x) {
    std::set<GroupElt> cls;
    for (auto y : G.elements()) cls.insert(G.conj(y, x));
    return {cls.begin(), cls.end()};
}

/// All conjugacy classes, ordered by their smallest element.
inline std::vector<std::vector<GroupElt>> conjugacy_classes(const FinGroup& G) {
    std::vector<std::vector<GroupElt>> out;
    std::vector<bool> seen(G.order(), false);
    for (auto x : G.elements()) {
        if (seen[x.index]) continue;
        auto c = conjugacy_class(G, x);
        for (auto y : c) seen[y.index] = true;
        out.push_back(std::move(c));
    }
    return out;
}

/// A subgroup given by its elements, with the multiplication table induced from G.
struct Subgroup {
    GroupPtr parent;
    std::vector<GroupElt> elements;
    int order() const { return static_cast<int>(elements.size()); }
    bool contains(GroupElt x) const { return std::binary_search(elements.begin(), elements.end(), x); }
    /// Table in local indices: local(i) * local(j) = local(table[i][j]).
    std::vector<std::vector<int>> table() const {
        std::vector<std::vector<int>> t(order(), std::vector<int>(order()));
        for (int i = 0; i < order(); ++i)
            for (int j = 0; j < order(); ++j) {
                GroupElt p = parent->mul(elements[i], elements[j]);
                t[i][j] = static_cast<int>(std::lower_bound(elements.begin(), elements.end(), p) - elements.begin());
            }
        return t;
    }
};

inline Subgroup centralizer(const GroupPtr& G, GroupElt x) {
    Subgroup s{G, {}};
    for (auto y : G->elements()) {
        if (G->mul(y, x) == G->mul(x, y)) s.elements.push_back(y);
    }
    return s;
}

/// Parity of a permutation: +1 or -1.
inline int sign(const FinGroup& G, GroupElt x) {
    const auto& p = G.perm(x);
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

/// Parses "dihedral:12" or "sym:4".
inline GroupPtr parse_group(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ValidationError("bad_group", "group must look like dihedral:m or sym:n");
    std::string kind = spec.substr(0, colon);
    int param = 0;
    try {
        param = std::stoi(spec.substr(colon + 1));
    } catch (...) {
        throw ValidationError("bad_group", "bad group parameter in '" + spec + "'");
    }
    if (kind == "dihedral" || kind == "D") return dihedral(param);
    if (kind == "sym" || kind == "S") return symmetric(param);
    throw ValidationError("bad_group", "unknown group family '" + kind + "'");
}

}  // namespace pointed
