#include "redsyl/gf.hpp"

#include <algorithm>
#include <cstddef>

namespace redsyl {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidPrime: return "InvalidPrime";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::NoSuchRoot: return "NoSuchRoot";
        case ErrorKind::ShapeError: return "ShapeError";
        case ErrorKind::UnknownGroup: return "UnknownGroup";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::InvalidGroupTable: return "InvalidGroupTable";
        case ErrorKind::CyclicGroup: return "CyclicGroup";
        case ErrorKind::NotMaximal: return "NotMaximal";
        case ErrorKind::SamePrime: return "SamePrime";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::WrongProvenance: return "WrongProvenance";
        case ErrorKind::IndexMismatch: return "IndexMismatch";
        case ErrorKind::MatchingFailed: return "MatchingFailed";
        case ErrorKind::TooLargeToEnumerate: return "TooLargeToEnumerate";
        case ErrorKind::ExactBudgetExceeded: return "ExactBudgetExceeded";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "UnknownError";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::pair<std::uint64_t, int>> prime_power_decompose(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t l = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            l = d;
            break;
        }
    }
    int k = 0;
    std::uint64_t m = n;
    while (m % l == 0) {
        m /= l;
        ++k;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(l, k);
}

namespace {

// Polynomials over the prime field GF(l), constant term first, no trailing
// zero coefficients (the zero polynomial is the empty vector).

using Poly = std::vector<Felem>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t l) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = static_cast<Felem>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % l);
        }
    }
    poly_trim(c);
    return c;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t l) {
    std::uint64_t base = a % l, acc = 1, e = l - 2;
    while (e > 0) {
        if (e & 1) acc = acc * base % l;
        base = base * base % l;
        e >>= 1;
    }
    return acc;
}

// Quotient and remainder of a / b over GF(l), b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint64_t l) {
    poly_trim(a);
    Poly q;
    const Felem lead_inv = static_cast<Felem>(mod_inv(b.back(), l));
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Felem factor = static_cast<Felem>(static_cast<std::uint64_t>(a.back()) * lead_inv % l);
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = static_cast<Felem>((q[shift] + factor) % l);
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(factor) * b[j] % l;
            a[shift + j] = static_cast<Felem>((a[shift + j] + l - sub) % l);
        }
        poly_trim(a);
    }
    poly_trim(q);
    return {std::move(q), std::move(a)};
}

Poly poly_rem(Poly a, const Poly& b, std::uint64_t l) {
    return poly_divmod(std::move(a), b, l).second;
}

// Extended Euclid: returns (g, u) with u*a == g (mod m), g = gcd(a, m).
std::pair<Poly, Poly> poly_half_xgcd(Poly a, Poly m, std::uint64_t l) {
    Poly r0 = std::move(m), r1 = std::move(a);
    Poly u0 = {}, u1 = {1};
    while (!r1.empty()) {
        auto [q, rem] = poly_divmod(std::move(r0), r1, l);
        // (u0, u1) <- (u1, u0 - q*u1)
        Poly qu = poly_mul(q, u1, l);
        Poly u2(std::max(u0.size(), qu.size()), 0);
        for (std::size_t i = 0; i < u2.size(); ++i) {
            std::uint64_t x = i < u0.size() ? u0[i] : 0;
            std::uint64_t y = i < qu.size() ? qu[i] : 0;
            u2[i] = static_cast<Felem>((x + l - y) % l);
        }
        poly_trim(u2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0};
}

bool poly_is_irreducible(const Poly& modulus, std::uint64_t l) {
    const std::size_t k = modulus.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    if (modulus[0] == 0) return false; // divisible by x
    // Trial division by every monic polynomial of degree 1..k/2.
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= l;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly div(d + 1, 0);
            std::uint64_t rest = low;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<Felem>(rest % l);
                rest /= l;
            }
            div[d] = 1;
            if (poly_rem(modulus, div, l).empty()) return false;
        }
    }
    return true;
}

} // namespace

std::vector<Felem> FieldGF::decode(Felem code) const {
    std::vector<Felem> digits(static_cast<std::size_t>(degree_), 0);
    std::uint64_t rest = code;
    for (int i = 0; i < degree_; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<Felem>(rest % char_);
        rest /= char_;
    }
    return digits;
}

Felem FieldGF::encode(const std::vector<Felem>& digits) const {
    std::uint64_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        code = code * char_ + digits[i] % char_;
    }
    return static_cast<Felem>(code);
}

Felem FieldGF::add(Felem a, Felem b) const {
    if (degree_ == 1) return static_cast<Felem>((static_cast<std::uint64_t>(a) + b) % char_);
    auto da = decode(a), db = decode(b);
    for (std::size_t i = 0; i < da.size(); ++i) {
        da[i] = static_cast<Felem>((static_cast<std::uint64_t>(da[i]) + db[i]) % char_);
    }
    return encode(da);
}

Felem FieldGF::sub(Felem a, Felem b) const { return add(a, neg(b)); }

Felem FieldGF::neg(Felem a) const {
    if (degree_ == 1) return a == 0 ? 0 : static_cast<Felem>(char_ - a);
    auto da = decode(a);
    for (auto& d : da) d = d == 0 ? 0 : static_cast<Felem>(char_ - d);
    return encode(da);
}

Felem FieldGF::mul(Felem a, Felem b) const {
    if (degree_ == 1) return static_cast<Felem>(static_cast<std::uint64_t>(a) * b % char_);
    if (a == 0 || b == 0) return 0;
    Poly pa = decode(a), pb = decode(b);
    poly_trim(pa);
    poly_trim(pb);
    Poly prod = poly_mul(pa, pb, char_);
    Poly rem = poly_rem(std::move(prod), modulus_, char_);
    rem.resize(static_cast<std::size_t>(degree_), 0);
    return encode(rem);
}

Felem FieldGF::inv(Felem a) const {
    if (a == 0) throw Error(ErrorKind::InternalError, "inverse of zero");
    if (degree_ == 1) return static_cast<Felem>(mod_inv(a, char_));
    Poly pa = decode(a);
    poly_trim(pa);
    auto [g, u] = poly_half_xgcd(pa, modulus_, char_);
    if (g.size() != 1) throw Error(ErrorKind::InternalError, "modulus not irreducible");
    // Normalize so u*a == 1.
    const std::uint64_t ginv = mod_inv(g[0], char_);
    for (auto& c : u) c = static_cast<Felem>(c * ginv % char_);
    u.resize(static_cast<std::size_t>(degree_), 0);
    return encode(u);
}

Felem FieldGF::pow(Felem a, std::uint64_t e) const {
    Felem acc = 1; // code 1 is the multiplicative identity in every field here
    Felem base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldGF make_field(std::uint64_t l, int k, std::uint64_t ceiling) {
    if (!is_prime(l)) throw Error(ErrorKind::InvalidPrime, "characteristic must be prime, got " + std::to_string(l));
    if (k < 1) throw Error(ErrorKind::InvalidPrime, "degree must be >= 1");
    std::uint64_t order = 1;
    for (int i = 0; i < k; ++i) {
        order *= l;
        if (order > ceiling) {
            throw Error(ErrorKind::FieldTooLarge,
                        "field order " + std::to_string(l) + "^" + std::to_string(k) +
                            " exceeds ceiling " + std::to_string(ceiling));
        }
    }
    FieldGF f;
    f.char_ = l;
    f.degree_ = k;
    f.order_ = order;
    if (k == 1) {
        f.modulus_ = {0, 1}; // x
        return f;
    }
    // Smallest monic irreducible of degree k under the digit encoding.
    std::uint64_t count = order; // l^k lower-coefficient patterns
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly cand(static_cast<std::size_t>(k) + 1, 0);
        std::uint64_t rest = low;
        for (int i = 0; i < k; ++i) {
            cand[static_cast<std::size_t>(i)] = static_cast<Felem>(rest % l);
            rest /= l;
        }
        cand[static_cast<std::size_t>(k)] = 1;
        if (poly_is_irreducible(cand, l)) {
            f.modulus_ = std::move(cand);
            return f;
        }
    }
    throw Error(ErrorKind::InternalError, "no irreducible polynomial found");
}

Felem element_of_order(const FieldGF& field, std::uint64_t p) {
    const std::uint64_t q = field.order();
    if (p == 0 || (q - 1) % p != 0) {
        throw Error(ErrorKind::NoSuchRoot,
                    "p = " + std::to_string(p) + " does not divide q-1 = " + std::to_string(q - 1));
    }
    const std::uint64_t e = (q - 1) / p;
    for (Felem g = 1; g < q; ++g) {
        Felem zeta = field.pow(g, e);
        if (zeta != 1) return zeta;
    }
    throw Error(ErrorKind::InternalError, "no p-th root of unity found");
}

MatrixGF MatrixGF::identity(const FieldGF& field, std::size_t n) {
    MatrixGF m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatrixGF MatrixGF::from_rows(const FieldGF& field, const std::vector<Vec>& rows, std::size_t cols) {
    MatrixGF m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::ShapeError, "row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

MatrixGF MatrixGF::mul(const MatrixGF& other) const {
    if (cols_ != other.rows_) throw Error(ErrorKind::ShapeError, "matrix product shape mismatch");
    MatrixGF out(field_, rows_, other.cols_);
    if (field_.degree() == 1) {
        const std::uint64_t l = field_.characteristic();
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < other.cols_; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t t = 0; t < cols_; ++t) {
                    acc += static_cast<std::uint64_t>(at(i, t)) * other.at(t, j);
                }
                out.set(i, j, static_cast<Felem>(acc % l));
            }
        }
        return out;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < other.cols_; ++j) {
            Felem acc = 0;
            for (std::size_t t = 0; t < cols_; ++t) {
                acc = field_.add(acc, field_.mul(at(i, t), other.at(t, j)));
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

Vec MatrixGF::apply(const Vec& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::ShapeError, "matrix-vector shape mismatch");
    Vec out(rows_, 0);
    if (field_.degree() == 1) {
        const std::uint64_t l = field_.characteristic();
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < cols_; ++t) {
                acc += static_cast<std::uint64_t>(at(i, t)) * v[t];
            }
            out[i] = static_cast<Felem>(acc % l);
        }
        return out;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        Felem acc = 0;
        for (std::size_t t = 0; t < cols_; ++t) {
            acc = field_.add(acc, field_.mul(at(i, t), v[t]));
        }
        out[i] = acc;
    }
    return out;
}

MatrixGF MatrixGF::sub(const MatrixGF& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::ShapeError, "matrix difference shape mismatch");
    }
    MatrixGF out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = field_.sub(entries_[i], other.entries_[i]);
    }
    return out;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    }
    return out;
}

MatrixGF MatrixGF::stack(const MatrixGF& below) const {
    if (cols_ != below.cols_) throw Error(ErrorKind::ShapeError, "stack width mismatch");
    MatrixGF out(field_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    }
    for (std::size_t i = 0; i < below.rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.set(rows_ + i, j, below.at(i, j));
    }
    return out;
}

std::vector<std::size_t> MatrixGF::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t i = r; i < rows_; ++i) {
            if (at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel == rows_) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(entries_[sel * cols_ + j], entries_[r * cols_ + j]);
        }
        const Felem pinv = field_.inv(at(r, col));
        for (std::size_t j = col; j < cols_; ++j) set(r, j, field_.mul(at(r, j), pinv));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const Felem f = at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                set(i, j, field_.sub(at(i, j), field_.mul(f, at(r, j))));
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::size_t MatrixGF::rank() const {
    MatrixGF copy = *this;
    return copy.rref().size();
}

std::vector<Vec> MatrixGF::kernel() const {
    MatrixGF r = *this;
    std::vector<std::size_t> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = field_.neg(r.at(i, f));
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;
    // Canonicalize to the reduced-echelon basis of the null space.
    MatrixGF b = from_rows(field_, basis, cols_);
    b.rref();
    std::vector<Vec> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Vec row(cols_);
        for (std::size_t j = 0; j < cols_; ++j) row[j] = b.at(i, j);
        out.push_back(std::move(row));
    }
    return out;
}

std::optional<Vec> MatrixGF::solve_right(const Vec& b) const {
    if (b.size() != rows_) throw Error(ErrorKind::ShapeError, "solve_right rhs length mismatch");
    MatrixGF aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_, b[i]);
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vec x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
}

std::optional<MatrixGF> MatrixGF::inverse() const {
    if (rows_ != cols_) throw Error(ErrorKind::ShapeError, "inverse of non-square matrix");
    MatrixGF aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, 1);
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= cols_)) return std::nullopt;
    MatrixGF out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, aug.at(i, cols_ + j));
    }
    return out;
}

bool MatrixGF::operator==(const MatrixGF& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_ &&
           field_ == other.field_;
}

Subspace::Subspace(const FieldGF& field, std::size_t ambient_dim, const std::vector<Vec>& spanning)
    : field_(field), ambient_(ambient_dim) {
    if (!spanning.empty()) {
        MatrixGF m = MatrixGF::from_rows(field, spanning, ambient_dim);
        pivots_ = m.rref();
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            Vec row(ambient_dim);
            for (std::size_t j = 0; j < ambient_dim; ++j) row[j] = m.at(i, j);
            basis_.push_back(std::move(row));
        }
    }
}

bool Subspace::contains(const Vec& v) const {
    Vec r = coset_rep(v);
    return std::all_of(r.begin(), r.end(), [](Felem x) { return x == 0; });
}

Vec Subspace::coset_rep(const Vec& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::ShapeError, "coset_rep dimension mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Felem c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) {
            r[j] = field_.sub(r[j], field_.mul(c, basis_[i][j]));
        }
    }
    return r;
}

BigInt Subspace::size() const { return big_pow(BigInt(field_.order()), dim()); }

BigInt Subspace::coset_count() const { return big_pow(BigInt(field_.order()), ambient_ - dim()); }

void Subspace::for_each_coset_rep(std::uint64_t ceiling, const std::function<void(const Vec&)>& fn) const {
    if (coset_count() > ceiling) {
        throw Error(ErrorKind::TooLargeToEnumerate,
                    "coset count " + big_str(coset_count()) + " exceeds ceiling " + std::to_string(ceiling));
    }
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (!is_pivot[j]) free_cols.push_back(j);
    }
    const std::uint64_t q = field_.order();
    Vec v(ambient_, 0);
    std::vector<Felem> digits(free_cols.size(), 0);
    // Odometer with the first free coordinate most significant, so reps come
    // out in lexicographic vector order.
    while (true) {
        fn(v);
        std::size_t i = free_cols.size();
        while (i > 0) {
            --i;
            if (digits[i] + 1 < q) {
                ++digits[i];
                v[free_cols[i]] = digits[i];
                break;
            }
            digits[i] = 0;
            v[free_cols[i]] = 0;
            if (i == 0) return;
        }
        if (free_cols.empty()) return;
    }
}

void Subspace::for_each_member(std::uint64_t ceiling, const std::function<void(const Vec&)>& fn) const {
    if (size() > ceiling) {
        throw Error(ErrorKind::TooLargeToEnumerate,
                    "subspace size " + big_str(size()) + " exceeds ceiling " + std::to_string(ceiling));
    }
    const std::uint64_t q = field_.order();
    Vec v(ambient_, 0);
    std::vector<Felem> coeffs(basis_.size(), 0);
    while (true) {
        fn(v);
        std::size_t i = basis_.size();
        bool advanced = false;
        while (i > 0) {
            --i;
            // Remove the old contribution of basis_[i], bump, re-add.
            if (coeffs[i] + 1 < q) {
                for (std::size_t j = 0; j < ambient_; ++j) v[j] = field_.add(v[j], basis_[i][j]);
                ++coeffs[i];
                advanced = true;
                break;
            }
            for (std::size_t j = 0; j < ambient_; ++j) {
                v[j] = field_.sub(v[j], field_.mul(coeffs[i], basis_[i][j]));
            }
            coeffs[i] = 0;
        }
        if (!advanced) return;
    }
}

std::uint64_t vec_code(const FieldGF& field, const Vec& v) {
    std::uint64_t code = 0;
    for (Felem x : v) code = code * field.order() + x;
    return code;
}

} // namespace redsyl
