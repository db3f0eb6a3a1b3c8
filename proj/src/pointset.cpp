#include "posh/pointset.hpp"

#include <algorithm>
#include <set>

#include "posh/errors.hpp"

namespace posh {

ExplodingSequence ExplodingSequence::make(int n, int alpha) {
    if (n < 2) throw DomainError("exploding sequence needs n >= 2");
    if (alpha < 3) throw DomainError("alpha must be at least 3");
    ExplodingSequence s;
    s.alpha = alpha;
    s.y.assign(n + 1, 0);
    BigInt pw = 1;
    for (int i = 3; i <= n; ++i) {
        s.y[i] = pw;
        pw *= alpha;
    }
    return s;
}

bool ExplodingSequence::explodes() const {
    int n = static_cast<int>(y.size()) - 1;
    for (int i = 2; i < n; ++i)
        if (!(y[i + 1] > 2 * y[i] + y[i - 1])) return false;
    return true;
}

std::string PointRef::name() const {
    return std::string(upper || index <= 2 ? "p" : "q") + std::to_string(index);
}

PointSet PointSet::exploding(int n, int alpha) {
    auto seq = ExplodingSequence::make(n, alpha);
    if (!seq.explodes()) throw InvariantError("sequence does not explode");
    PointSet ps;
    ps.alpha_ = alpha;
    for (int i = 1; i <= n; ++i) {
        ps.upper_.push_back({BigInt(i), seq.y[i]});
        ps.lower_.push_back({BigInt(i), -seq.y[i]});
    }
    return ps;
}

PointSet PointSet::from_columns(std::vector<IntPoint> upper, std::vector<IntPoint> lower) {
    if (upper.size() != lower.size() || upper.size() < 2)
        throw DomainError("need two equally long columns lists with n >= 2");
    if (!(upper[0] == lower[0]) || !(upper[1] == lower[1]))
        throw DomainError("columns 1 and 2 must hold a single point each");
    PointSet ps;
    ps.upper_ = std::move(upper);
    ps.lower_ = std::move(lower);
    auto rep = verify_order_type(ps);
    if (!rep.ok())
        throw DomainError("order type differs from the exploding double chain (" +
                          std::to_string(rep.violations.size()) + " violations)");
    return ps;
}

std::vector<PointRef> PointSet::refs() const {
    std::vector<PointRef> out;
    for (int i = 1; i <= std::min(2, n()); ++i) out.push_back({i, true});
    for (int i = 3; i <= n(); ++i) {
        out.push_back({i, true});
        out.push_back({i, false});
    }
    return out;
}

PointSet build_hn(int n, int alpha) { return PointSet::exploding(n, alpha); }

Side right_halfplane(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
    if (a == b) throw DomainError("right_halfplane: a and b coincide");
    int o = orientation(a, b, c);
    return o < 0 ? Side::Right : (o > 0 ? Side::Left : Side::On);
}

namespace {

PointRef canon(PointRef r) { return r.index <= 2 ? PointRef{r.index, true} : r; }

using RefSet = std::set<std::pair<int, bool>>;

void add(RefSet& s, PointRef r) {
    r = canon(r);
    s.insert({r.index, r.upper});
}

// H(p_i, q_j) by the three-case formula
RefSet base_set(int n, int i, int j) {
    RefSet s;
    for (int k = 1; k <= n; ++k) {
        bool pk = false, qk = false;
        if (i > j) {
            pk = k <= j || k > i;
            qk = k < j;
        } else if (i == j) {
            pk = k < i;
            qk = k < i;
        } else {
            pk = k < i;
            qk = k <= i || k > j;
        }
        if (pk) add(s, {k, true});
        if (qk) add(s, {k, false});
    }
    return s;
}

RefSet all_points(int n) {
    RefSet s;
    for (int k = 1; k <= n; ++k) {
        add(s, {k, true});
        add(s, {k, false});
    }
    return s;
}

RefSet predicted(int n, PointRef a, PointRef b);

RefSet complement_of(int n, PointRef a, PointRef b) {
    // right of a->b = left of b->a, minus the line through both (only a, b)
    RefSet rev = predicted(n, b, a);
    RefSet out;
    for (auto pt : all_points(n))
        if (!rev.count(pt)) out.insert(pt);
    return out;
}

RefSet predicted(int n, PointRef a, PointRef b) {
    a = canon(a);
    b = canon(b);
    RefSet s;
    const int i = a.index, j = b.index;
    // columns 1 and 2 may be read under either name; prefer the direct formulas
    bool a_can_p = a.upper, a_can_q = !a.upper || i <= 2;
    bool b_can_p = b.upper, b_can_q = !b.upper || j <= 2;
    if (a_can_p && b_can_q) {
        s = base_set(n, i, j);
    } else if (a_can_q && b_can_q && i < j) {
        s = base_set(n, i, j);
        s.erase({canon({i, false}).index, canon({i, false}).upper});
    } else if (a_can_p && b_can_p && i > j) {
        s = base_set(n, i, j);
        s.erase({canon({j, true}).index, canon({j, true}).upper});
    } else {
        s = complement_of(n, a, b);
    }
    s.erase({a.index, a.upper});
    s.erase({b.index, b.upper});
    return s;
}

}  // namespace

std::vector<PointRef> predicted_right_set(int n, PointRef a, PointRef b) {
    if (canon(a) == canon(b)) throw DomainError("predicted_right_set: a and b coincide");
    std::vector<PointRef> out;
    for (auto [k, up] : predicted(n, a, b)) out.push_back({k, up});
    return out;
}

OrderTypeReport verify_order_type(const PointSet& ps) {
    OrderTypeReport rep;
    const int n = ps.n();
    auto refs = ps.refs();
    for (PointRef a : refs) {
        for (PointRef b : refs) {
            if (a == b) continue;
            ++rep.pairs_checked;
            RefSet pred = predicted(n, a, b);
            for (PointRef c : refs) {
                if (c == a || c == b) continue;
                Side actual = right_halfplane(ps.at(a), ps.at(b), ps.at(c));
                bool in_pred = pred.count({c.index, c.upper}) > 0;
                bool ok = in_pred ? actual == Side::Right : actual == Side::Left;
                if (!ok) rep.violations.push_back({a, b, c, in_pred, actual});
            }
        }
    }
    return rep;
}

}  // namespace posh
