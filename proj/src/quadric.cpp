#include "fermat/quadric.hpp"

namespace fermat {

QuadraticForm::QuadraticForm(std::vector<std::vector<Rat>> matrix) : m_(std::move(matrix)) {
    const std::size_t size = m_.size();
    if (size == 0) throw std::invalid_argument("QuadraticForm: empty matrix");
    for (const auto& row : m_)
        if (row.size() != size) throw std::invalid_argument("QuadraticForm: not square");
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (m_[i][j] != m_[j][i]) throw std::invalid_argument("QuadraticForm: not symmetric");
}

QuadraticForm QuadraticForm::diagonal(std::vector<Rat> entries) {
    const std::size_t size = entries.size();
    std::vector<std::vector<Rat>> m(size, std::vector<Rat>(size, Rat(0)));
    for (std::size_t i = 0; i < size; ++i) m[i][i] = entries[i];
    return QuadraticForm(std::move(m));
}

QuadraticForm QuadraticForm::q_rs(int r, int s) {
    if (r < 0 || s < 0 || r + s < 1) throw std::invalid_argument("q_rs: need r, s >= 0, r+s >= 1");
    std::vector<Rat> diag(r + s, Rat(1));
    for (int i = r; i < r + s; ++i) diag[i] = Rat(-1);
    return QuadraticForm::diagonal(std::move(diag));
}

Signature signature(const QuadraticForm& form) {
    std::vector<std::vector<Rat>> a = form.matrix();
    const int size = form.size();
    Signature sig{0, 0, size};

    auto swap_rows_cols = [&](int i, int j) {
        std::swap(a[i], a[j]);
        for (int r = 0; r < size; ++r) std::swap(a[r][i], a[r][j]);
    };
    auto add_row_col = [&](int dst, int src) {  // row dst += row src; col dst += col src
        for (int c = 0; c < size; ++c) a[dst][c] += a[src][c];
        for (int r = 0; r < size; ++r) a[r][dst] += a[r][src];
    };

    for (int k = 0; k < size; ++k) {
        if (a[k][k] == 0) {
            for (int l = k + 1; l < size; ++l) {
                if (a[l][l] != 0) {
                    swap_rows_cols(k, l);
                    break;
                }
            }
        }
        if (a[k][k] == 0) {
            // All remaining diagonal entries are zero; a nonzero entry
            // a[l][m] gives the pivot 2*a[l][m] after row/col addition.
            bool found = false;
            for (int l = k; l < size && !found; ++l) {
                for (int m = l + 1; m < size && !found; ++m) {
                    if (a[l][m] != 0) {
                        add_row_col(l, m);
                        if (l != k) swap_rows_cols(k, l);
                        found = true;
                    }
                }
            }
            if (!found) break;  // remaining block is zero
        }
        const Rat pivot = a[k][k];
        if (pivot > 0) ++sig.positive;
        else ++sig.negative;
        for (int r = k + 1; r < size; ++r) {
            if (a[r][k] == 0) continue;
            const Rat factor = a[r][k] / pivot;
            for (int c = k; c < size; ++c) a[r][c] -= factor * a[k][c];
            for (int c = k; c < size; ++c) a[c][r] = a[r][c];
        }
    }
    return sig;
}

Int quadric_expected_count(int n) {
    if (n < 1) throw std::domain_error("quadric_expected_count: n must be >= 1");
    return (n % 2 == 0) ? Int(n / 2 + 3) : Int((n + 1) / 2 + 1);
}

std::string to_string(StructureType type) {
    return type == StructureType::PlusType ? "PlusType" : "MinusType";
}

namespace {
constexpr int kGauss = 4;  // Q(i) = Q(zeta_4)
}

RealStructureMatrix::RealStructureMatrix(std::vector<std::vector<Cyclotomic>> entries)
    : a_(std::move(entries)) {
    const std::size_t size = a_.size();
    if (size == 0) throw std::invalid_argument("RealStructureMatrix: empty");
    for (auto& row : a_) {
        if (row.size() != size) throw std::invalid_argument("RealStructureMatrix: not square");
        for (auto& x : row) x = x.promoted(kGauss % x.order() == 0 ? kGauss : x.order());
    }
}

RealStructureMatrix RealStructureMatrix::from_rational(
    const std::vector<std::vector<Rat>>& entries) {
    std::vector<std::vector<Cyclotomic>> a;
    a.reserve(entries.size());
    for (const auto& row : entries) {
        std::vector<Cyclotomic> out;
        out.reserve(row.size());
        for (const Rat& q : row) out.push_back(Cyclotomic::from_rational(kGauss, q));
        a.push_back(std::move(out));
    }
    return RealStructureMatrix(std::move(a));
}

RealStructureMatrix RealStructureMatrix::diagonal_example(int s, int r) {
    const int size = r + s;
    if (size < 1) throw std::invalid_argument("diagonal_example: empty");
    std::vector<std::vector<Rat>> a(size, std::vector<Rat>(size, Rat(0)));
    for (int i = 0; i < s; ++i) a[i][i] = Rat(-1);
    for (int i = s; i < size; ++i) a[i][i] = Rat(1);
    return from_rational(a);
}

RealStructureMatrix RealStructureMatrix::antidiagonal_example(int size) {
    if (size < 2 || size % 2 != 0)
        throw std::invalid_argument("antidiagonal_example: even size >= 2 required");
    std::vector<std::vector<Rat>> a(size, std::vector<Rat>(size, Rat(0)));
    for (int i = 0; i + 1 < size; i += 2) {
        a[i][i + 1] = Rat(1);
        a[i + 1][i] = Rat(-1);
    }
    return from_rational(a);
}

namespace {

std::vector<std::vector<Cyclotomic>> mat_mul(const std::vector<std::vector<Cyclotomic>>& x,
                                             const std::vector<std::vector<Cyclotomic>>& y) {
    const std::size_t size = x.size();
    std::vector<std::vector<Cyclotomic>> out(size,
                                             std::vector<Cyclotomic>(size, Cyclotomic::zero(kGauss)));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t k = 0; k < size; ++k) {
            if (x[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < size; ++j) out[i][j] += x[i][k] * y[k][j];
        }
    return out;
}

std::vector<std::vector<Cyclotomic>> mat_conj(const std::vector<std::vector<Cyclotomic>>& x) {
    auto out = x;
    for (auto& row : out)
        for (auto& v : row) v = v.conj();
    return out;
}

// Gauss-Jordan over the field Q(i).
std::vector<std::vector<Cyclotomic>> mat_inverse(std::vector<std::vector<Cyclotomic>> a) {
    const std::size_t size = a.size();
    std::vector<std::vector<Cyclotomic>> inv(size,
                                             std::vector<Cyclotomic>(size, Cyclotomic::zero(kGauss)));
    for (std::size_t i = 0; i < size; ++i) inv[i][i] = Cyclotomic::one(kGauss);
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && a[pivot][col].is_zero()) ++pivot;
        if (pivot == size) throw std::domain_error("matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Cyclotomic inv_pivot = a[col][col].inverse();
        for (std::size_t j = 0; j < size; ++j) {
            a[col][j] *= inv_pivot;
            inv[col][j] *= inv_pivot;
        }
        for (std::size_t r = 0; r < size; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Cyclotomic factor = a[r][col];
            for (std::size_t j = 0; j < size; ++j) {
                a[r][j] -= factor * a[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

RealStructureMatrix RealStructureMatrix::conjugated_by(const RealStructureMatrix& p) const {
    if (p.size() != size())
        throw std::invalid_argument("conjugated_by: size mismatch");
    return RealStructureMatrix(mat_mul(mat_mul(mat_inverse(p.a_), a_), mat_conj(p.a_)));
}

StructureType structure_discriminator(const RealStructureMatrix& a) {
    const auto product = mat_mul(a.entries(), mat_conj(a.entries()));
    const std::size_t size = product.size();
    const Cyclotomic plus = Cyclotomic::one(kGauss);
    const Cyclotomic minus = -Cyclotomic::one(kGauss);
    bool is_plus = true, is_minus = true;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (i == j) {
                if (product[i][j] != plus) is_plus = false;
                if (product[i][j] != minus) is_minus = false;
            } else if (!product[i][j].is_zero()) {
                is_plus = is_minus = false;
            }
        }
    }
    if (is_plus) return StructureType::PlusType;
    if (is_minus) {
        if (size % 2 != 0)
            throw std::domain_error("structure_discriminator: A*conj(A) = -I is impossible in odd size");
        return StructureType::MinusType;
    }
    throw std::domain_error("structure_discriminator: A*conj(A) is not a scalar +-I; "
                            "not a real-structure candidate");
}

}  // namespace fermat
