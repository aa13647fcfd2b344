#include "toda/cartan.hpp"

#include "toda/errors.hpp"

#include <algorithm>

namespace toda {

std::string CartanMatrix::to_json() const {
    std::string out = "[";
    for (int i = 1; i <= size; ++i) {
        out += i > 1 ? ",[" : "[";
        for (int j = 1; j <= size; ++j) {
            if (j > 1) out += ',';
            out += '"' + to_string(at(i, j)) + '"';
        }
        out += ']';
    }
    return out + "]";
}

static CartanMatrix zero_matrix(MatrixFamily family, int size) {
    return CartanMatrix{family, size, std::vector<Rational>(static_cast<std::size_t>(size * size))};
}

CartanMatrix build(MatrixFamily family, int size) {
    switch (family) {
    case MatrixFamily::AffineA:
    case MatrixFamily::AffineCt:
        if (size < 3) throw RankError("affine Cartan matrices need size ≥ 3 (n ≥ 2)");
        break;
    case MatrixFamily::FiniteB:
    case MatrixFamily::FiniteC:
        if (size < 2) throw RankError("finite B/C Cartan matrices need size ≥ 2");
        break;
    case MatrixFamily::FiniteA:
        if (size < 1) throw RankError("finite A Cartan matrices need size ≥ 1");
        break;
    case MatrixFamily::Derived:
        throw DomainError("cannot build a derived matrix by name");
    }
    CartanMatrix m = zero_matrix(family, size);
    for (int i = 1; i <= size; ++i) {
        m.at(i, i) = 2;
        if (i > 1) m.at(i, i - 1) = -1;
        if (i < size) m.at(i, i + 1) = -1;
    }
    switch (family) {
    case MatrixFamily::AffineA:
        m.at(1, size) = -1;
        m.at(size, 1) = -1;
        break;
    case MatrixFamily::AffineCt:
        m.at(1, 2) = -2;
        m.at(size, size - 1) = -2;
        break;
    case MatrixFamily::FiniteB:
        m.at(size - 1, size) = -2;
        break;
    case MatrixFamily::FiniteC:
        m.at(size, size - 1) = -2;
        break;
    default:
        break;
    }
    return m;
}

CartanMatrix ambient_matrix(const AlgebraSpec& spec) {
    validate(spec);
    return build(spec.family == Family::AffineA ? MatrixFamily::AffineA : MatrixFamily::AffineCt,
                 spec.size());
}

CartanMatrix identity_matrix(int size) {
    CartanMatrix m = zero_matrix(MatrixFamily::Derived, size);
    for (int i = 1; i <= size; ++i) m.at(i, i) = 1;
    return m;
}

CartanMatrix multiply(const CartanMatrix& a, const CartanMatrix& b) {
    if (a.size != b.size) throw DomainError("matrix sizes differ");
    CartanMatrix c = zero_matrix(MatrixFamily::Derived, a.size);
    for (int i = 1; i <= a.size; ++i)
        for (int k = 1; k <= a.size; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 1; j <= a.size; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

CartanMatrix inverse(const CartanMatrix& m) {
    const int n = m.size;
    CartanMatrix a = m;
    CartanMatrix inv = identity_matrix(n);
    for (int col = 1; col <= n; ++col) {
        int pivot = 0;
        for (int r = col; r <= n; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == 0) throw SingularError("matrix is singular");
        if (pivot != col)
            for (int j = 1; j <= n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Rational p = a.at(col, col);
        for (int j = 1; j <= n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            const Rational f = a.at(r, col);
            for (int j = 1; j <= n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    inv.family = MatrixFamily::Derived;
    return inv;
}

CartanMatrix inverse_finite_a(int l) {
    if (l < 1) throw RankError("inverse_finite_a needs l ≥ 1");
    CartanMatrix m = zero_matrix(MatrixFamily::Derived, l);
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m.at(i, j) = Rational(std::min(i, j) * (l + 1 - std::max(i, j)), l + 1);
    for (auto& q : m.data) q.canonicalize();
    return m;
}

// ---------------------------------------------------------------- index blocks

ConsecutiveSet ConsecutiveSet::wrap_set(int r2, int r1, int n) {
    ConsecutiveSet J{r2, (n + 1 - r2) + r1, true};
    validate(J, n);
    return J;
}

std::vector<int> ConsecutiveSet::elements(int n) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int t = 0; t <= length_param; ++t) out.push_back((start - 1 + t) % (n + 1) + 1);
    return out;
}

int ConsecutiveSet::last(int n) const { return (start - 1 + length_param) % (n + 1) + 1; }

bool ConsecutiveSet::contains(int i, int n) const {
    const int offset = ((i - start) % (n + 1) + (n + 1)) % (n + 1);
    return offset <= length_param;
}

std::string ConsecutiveSet::describe(int n) const {
    std::string out = "{";
    auto el = elements(n);
    for (std::size_t k = 0; k < el.size(); ++k) out += (k ? "," : "") + std::to_string(el[k]);
    return out + "}";
}

void validate(const ConsecutiveSet& J, int n) {
    if (J.length_param < 0) throw DomainError("block length parameter must be ≥ 0");
    if (J.start < 1 || J.start > n + 1)
        throw DomainError("block start " + std::to_string(J.start) + " outside 1.." + std::to_string(n + 1));
    if (J.size() >= n + 1) throw DomainError("block must be a proper subset of the index set");
    if (!J.wrap) {
        if (J.start + J.length_param > n + 1)
            throw DomainError("consecutive block runs past n+1; use a wrap block instead");
        return;
    }
    const int r2 = J.start;
    const int r1 = J.start + J.length_param - (n + 1);
    if (!(1 <= r1 && r1 < r2 - 1 && r2 - 1 <= n))
        throw DomainError("wrap block needs 1 ≤ r1 < r2-1 ≤ n (got r2=" + std::to_string(r2) +
                          ", r1=" + std::to_string(r1) + ")");
}

CartanMatrix principal_submatrix(const CartanMatrix& m, const ConsecutiveSet& J) {
    const int n = m.size - 1;
    validate(J, n);
    const auto el = J.elements(n);
    CartanMatrix sub = zero_matrix(MatrixFamily::Derived, J.size());
    for (int a = 1; a <= sub.size; ++a)
        for (int b = 1; b <= sub.size; ++b)
            sub.at(a, b) = m.at(el[static_cast<std::size_t>(a - 1)], el[static_cast<std::size_t>(b - 1)]);
    return sub;
}

CartanMatrix inverse_submatrix(const CartanMatrix& m, const ConsecutiveSet& J) {
    return inverse(principal_submatrix(m, J));
}

}  // namespace toda
