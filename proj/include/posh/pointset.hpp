#pragma once

#include <string>
#include <vector>

#include "posh/exact.hpp"

namespace posh {

// Heights of the double chain: y_1 = y_2 = 0, y_i = alpha^(i-3) for i >= 3.
struct ExplodingSequence {
    int alpha = 3;
    std::vector<BigInt> y;  // y[0] unused, y[1..n]

    static ExplodingSequence make(int n, int alpha = 3);
    // y_{i+1} > 2 y_i + y_{i-1} for every 2 <= i < n
    bool explodes() const;
};

// Names a point of the chain: column i (1-based) and upper (p_i) or lower (q_i).
// In columns 1 and 2 both names denote the same point.
struct PointRef {
    int index;
    bool upper;
    friend bool operator==(const PointRef&, const PointRef&) = default;
    std::string name() const;
};

class PointSet {
  public:
    // The exploding double chain H_n.
    static PointSet exploding(int n, int alpha = 3);
    // Explicit coordinates for p_1..p_n and q_1..q_n (index 0 of each vector is
    // column 1). Accepted only if their order type is that of the chain.
    static PointSet from_columns(std::vector<IntPoint> upper, std::vector<IntPoint> lower);

    int n() const { return static_cast<int>(upper_.size()); }
    int size() const { return 2 * n() - 2; }
    int alpha() const { return alpha_; }
    const IntPoint& p(int i) const { return upper_.at(i - 1); }
    const IntPoint& q(int i) const { return lower_.at(i - 1); }
    const IntPoint& at(PointRef r) const { return r.upper ? p(r.index) : q(r.index); }
    // p_1, p_2, then p_i, q_i for i = 3..n
    std::vector<PointRef> refs() const;

  private:
    PointSet() = default;
    std::vector<IntPoint> upper_, lower_;
    int alpha_ = 0;  // 0 for explicit coordinates
};

PointSet build_hn(int n, int alpha = 3);

enum class Side { Left, Right, On };

// Where c lies relative to the directed line a->b. Throws DomainError if a == b.
Side right_halfplane(const IntPoint& a, const IntPoint& b, const IntPoint& c);

// Right-halfplane membership predicted by the case formula of the chain for the
// directed line a->b (a and b distinct points), restricted to columns <= n.
std::vector<PointRef> predicted_right_set(int n, PointRef a, PointRef b);

struct OrderTypeViolation {
    PointRef a, b, c;
    bool predicted_right;
    Side actual;
};

struct OrderTypeReport {
    long pairs_checked = 0;
    std::vector<OrderTypeViolation> violations;
    bool ok() const { return violations.empty(); }
};

OrderTypeReport verify_order_type(const PointSet& ps);

}  // namespace posh
