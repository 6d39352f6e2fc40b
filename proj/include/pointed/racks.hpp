#pragma once

// Racks from conjugacy classes, rack 2-cocycles, and their extension to group
// 1-cocycles chi_tau(theta) used to realize the braided vector space (kX, c^q) as a
// Yetter-Drinfeld module.

#include <algorithm>
#include <string>
#include <vector>

#include "pointed/cyclotomic.hpp"
#include "pointed/groups.hpp"

namespace pointed {

struct Rack {
    GroupPtr group;
    std::vector<GroupElt> elements;   // tag of each rack element
    std::vector<std::string> labels;
    std::vector<std::vector<int>> op;  // op[i][j] = i |> j

    int size() const { return static_cast<int>(elements.size()); }
    int index_of(GroupElt x) const {
        for (int i = 0; i < size(); ++i)
            if (elements[i] == x) return i;
        return -1;
    }
    int index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (labels[i] == label) return i;
        throw ValidationError("bad_rack_element", "'" + label + "' is not in the rack");
    }

    /// Each i |> (.) is a bijection and i |> (j |> k) = (i |> j) |> (i |> k).
    bool satisfies_axioms() const {
        int n = size();
        for (int i = 0; i < n; ++i) {
            std::vector<bool> hit(n, false);
            for (int j = 0; j < n; ++j) hit[op[i][j]] = true;
            if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (op[i][op[j][k]] != op[op[i][j]][op[i][k]]) return false;
        }
        return true;
    }
};

/// The conjugacy class as a rack under x |> y = x y x^-1, ordered by label.
inline Rack conjugation_rack(const GroupPtr& G, std::vector<GroupElt> cls) {
    Rack r;
    r.group = G;
    std::sort(cls.begin(), cls.end(),
              [&](GroupElt a, GroupElt b) { return G->label(a) < G->label(b); });
    r.elements = cls;
    for (auto x : cls) r.labels.push_back(G->label(x));
    int n = r.size();
    r.op.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = r.index_of(G->conj(cls[i], cls[j]));
            if (k < 0) throw ValidationError("not_a_class", "element set is not closed under conjugation");
            r.op[i][j] = k;
        }
    return r;
}

/// O_j^n: the class of j-cycles in S_n.
inline Rack cycle_class_rack(const GroupPtr& G, int j) {
    if (G->kind() != FinGroup::Kind::Symmetric) throw ValidationError("wrong_group", "cycle classes need a symmetric group");
    int n = G->parameter();
    if (j < 2 || j > n) throw ValidationError("bad_rack", "cycle length out of range");
    std::vector<int> p(n);
    for (int x = 0; x < n; ++x) p[x] = x;
    for (int x = 0; x < j; ++x) p[x] = (x + 1) % j;
    return conjugation_rack(G, conjugacy_class(*G, G->from_perm(p)));
}

struct RackCocycle {
    enum class Kind { MinusOne, Chi, Custom };
    Rack rack;
    Kind kind = Kind::Custom;
    std::vector<std::vector<CycScalar>> q;  // q[i][j] = q_{ij}

    std::string name() const {
        switch (kind) {
            case Kind::MinusOne: return "-1";
            case Kind::Chi: return "chi";
            default: return "custom";
        }
    }

    /// q_{i, j|>k} q_{j,k} = q_{i|>j, i|>k} q_{i,k} for all i, j, k.
    bool satisfies_identity() const {
        int n = rack.size();
        const auto& op = rack.op;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (q[i][op[j][k]] * q[j][k] != q[op[i][j]][op[i][k]] * q[i][k]) return false;
        return true;
    }
};

inline RackCocycle cocycle_minus_one(const Rack& rack) {
    RackCocycle rc;
    rc.rack = rack;
    rc.kind = RackCocycle::Kind::MinusOne;
    rc.q.assign(rack.size(), std::vector<CycScalar>(rack.size(), CycScalar(-1)));
    return rc;
}

namespace detail {

// chi_{(a,b)}(theta) = +1 if theta(a) < theta(b) else -1, for a transposition (a,b), a < b.
inline int chi_sign(const FinGroup& G, GroupElt tau, GroupElt theta) {
    const auto& t = G.perm(tau);
    int a = -1, b = -1;
    for (int x = 0; x < static_cast<int>(t.size()); ++x) {
        if (t[x] != x) {
            if (a < 0) {
                a = x;
            } else {
                b = x;
            }
        }
    }
    if (a < 0 || b < 0 || t[a] != b) throw ValidationError("bad_rack", "chi cocycle is defined on transpositions only");
    const auto& th = G.perm(theta);
    return th[a] < th[b] ? 1 : -1;
}

}  // namespace detail

/// The cocycle (j, i) -> chi_i(j) on O_2^n, i.e. q[j][i] = chi_i(j).
inline RackCocycle cocycle_chi(const Rack& rack) {
    RackCocycle rc;
    rc.rack = rack;
    rc.kind = RackCocycle::Kind::Chi;
    int n = rack.size();
    rc.q.assign(n, std::vector<CycScalar>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            rc.q[j][i] = CycScalar(detail::chi_sign(*rack.group, rack.elements[i], rack.elements[j]));
    return rc;
}

/// chi[tau][theta] for tau in the rack and theta in G.
struct OneCocycle {
    std::vector<std::vector<CycScalar>> chi;
    const CycScalar& operator()(int tau, GroupElt theta) const { return chi[tau][theta.index]; }
};

/// Extends q to a 1-cocycle on G: sign(theta) for q = -1, the order-comparison
/// formula for chi. Both the cocycle identity and the restriction to X x X are
/// checked exhaustively; failure is a StructuralError.
inline OneCocycle one_cocycle_extension(const RackCocycle& rc) {
    const Rack& X = rc.rack;
    const FinGroup& G = *X.group;
    if (G.kind() != FinGroup::Kind::Symmetric) throw ValidationError("wrong_group", "1-cocycle extension needs S_n");
    int n = X.size();
    OneCocycle c;
    c.chi.assign(n, std::vector<CycScalar>(G.order()));
    for (int t = 0; t < n; ++t)
        for (auto th : G.elements()) {
            switch (rc.kind) {
                case RackCocycle::Kind::MinusOne: c.chi[t][th.index] = CycScalar(sign(G, th)); break;
                case RackCocycle::Kind::Chi:
                    c.chi[t][th.index] = CycScalar(detail::chi_sign(G, X.elements[t], th));
                    break;
                default: throw ValidationError("bad_rack", "no extension rule for a custom cocycle");
            }
        }
    // chi_tau(s m) = chi_tau(m) chi_{m |> tau}(s)
    for (int t = 0; t < n; ++t)
        for (auto s : G.elements())
            for (auto m : G.elements()) {
                int mt = X.index_of(G.conj(m, X.elements[t]));
                if (c.chi[t][G.mul(s, m).index] != c.chi[t][m.index] * c.chi[mt][s.index])
                    throw StructuralError("1-cocycle identity fails for tau=" + X.labels[t] + ", sigma=" +
                                          G.label(s) + ", mu=" + G.label(m));
            }
    // chi_x(y) = q_{yx}
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (c.chi[x][X.elements[y].index] != rc.q[y][x])
                throw StructuralError("1-cocycle does not restrict to the rack cocycle");
    return c;
}

/// Parses "o2:-1", "o2:chi", "o4:-1" for a symmetric group.
inline RackCocycle parse_rack(const GroupPtr& G, const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ValidationError("bad_rack", "rack must look like o2:-1, o2:chi or o4:-1");
    std::string cls = spec.substr(0, colon), q = spec.substr(colon + 1);
    int j = 0;
    if (cls == "o2") {
        j = 2;
    } else if (cls == "o4") {
        j = 4;
    } else {
        throw ValidationError("bad_rack", "unknown class '" + cls + "'");
    }
    if (G->kind() != FinGroup::Kind::Symmetric) throw ValidationError("wrong_group", "racks are realized over sym:n");
    if (j == 4 && G->parameter() != 4) throw ValidationError("bad_rack", "o4 is only configured for sym:4");
    if (j == 2 && G->parameter() < 3) throw ValidationError("bad_rack", "o2 needs n >= 3");
    Rack X = cycle_class_rack(G, j);
    if (q == "-1") return cocycle_minus_one(X);
    if (q == "chi" && j == 2) return cocycle_chi(X);
    throw ValidationError("bad_rack", "unsupported cocycle '" + q + "' for class " + cls);
}

}  // namespace pointed
