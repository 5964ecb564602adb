#include "qlens/intlinalg.hpp"

#include <algorithm>

#include <json.hpp>

namespace qlens {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match rows*cols");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntegerMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p.at(i, j) += at(i, k) * other.at(k, j);
        }
    return p;
}

mpz_class IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntegerMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::string IntegerMatrix::to_json() const {
    nlohmann::ordered_json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& e = at(i, k);
            if (e.fits_slong_p())
                row.push_back(e.get_si());
            else
                row.push_back(e.get_str());
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump();
}

IntegerMatrix IntegerMatrix::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON: expected object with rows, cols, entries");
    std::size_t rows = j["rows"].get<std::size_t>();
    std::size_t cols = j["cols"].get<std::size_t>();
    if (j["entries"].size() != rows) throw ParseError("matrix JSON: wrong number of rows");
    std::vector<mpz_class> entries;
    entries.reserve(rows * cols);
    for (const auto& row : j["entries"]) {
        if (row.size() != cols) throw ParseError("matrix JSON: wrong row length");
        for (const auto& e : row) {
            if (e.is_number_integer())
                entries.emplace_back(e.get<long>());
            else if (e.is_string()) {
                try {
                    entries.emplace_back(mpz_class(e.get<std::string>()));
                } catch (const std::invalid_argument&) {
                    throw ParseError("matrix JSON: invalid integer string");
                }
            } else
                throw ParseError("matrix JSON: entries must be integers or decimal strings");
        }
    }
    return IntegerMatrix(rows, cols, std::move(entries));
}

std::vector<mpz_class> SNFResult::invariant_factors() const {
    std::vector<mpz_class> f;
    std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n && D.at(i, i) != 0; ++i) f.push_back(D.at(i, i));
    return f;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a -= q * row b
void row_axpy(IntegerMatrix& m, std::size_t a, std::size_t b, const mpz_class& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}
// col a -= q * col b
void col_axpy(IntegerMatrix& m, std::size_t a, std::size_t b, const mpz_class& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& input) {
    SNFResult res{input, IntegerMatrix::identity(input.rows()),
                  IntegerMatrix::identity(input.cols())};
    IntegerMatrix& A = res.D;
    IntegerMatrix& U = res.U;
    IntegerMatrix& V = res.V;
    std::size_t rows = A.rows(), cols = A.cols();

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pivot: smallest nonzero absolute value in the working submatrix,
        // ties broken by lowest (row, col).
        auto pick_pivot = [&]() -> bool {
            mpz_class best = 0;
            std::size_t bi = 0, bj = 0;
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (A.at(i, j) == 0) continue;
                    mpz_class a = abs(A.at(i, j));
                    if (!found || a < best) {
                        best = a;
                        bi = i;
                        bj = j;
                        found = true;
                    }
                }
            if (!found) return false;
            if (bi != t) {
                swap_rows(A, t, bi);
                swap_rows(U, t, bi);
            }
            if (bj != t) {
                swap_cols(A, t, bj);
                swap_cols(V, t, bj);
            }
            return true;
        };

        if (!pick_pivot()) break;  // submatrix is zero; done

        for (;;) {
            // Clear column t below the pivot, then row t to its right.
            // Nonzero remainders leave smaller entries; re-pivot and repeat.
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (A.at(i, t) == 0) continue;
                mpz_class q = A.at(i, t) / A.at(t, t);
                if (q != 0) {
                    row_axpy(A, i, t, q);
                    row_axpy(U, i, t, q);
                }
                if (A.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (A.at(t, j) == 0) continue;
                mpz_class q = A.at(t, j) / A.at(t, t);
                if (q != 0) {
                    col_axpy(A, j, t, q);
                    col_axpy(V, j, t, q);
                }
                if (A.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                pick_pivot();
                continue;
            }
            // Pivot must divide every entry of the remaining submatrix so
            // the diagonal comes out in divisibility order.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols && divisible; ++j)
                    if (A.at(i, j) % A.at(t, t) != 0) {
                        row_axpy(A, t, i, mpz_class(-1));
                        row_axpy(U, t, i, mpz_class(-1));
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (A.at(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) A.at(t, j) = -A.at(t, j);
            for (std::size_t j = 0; j < U.cols(); ++j) U.at(t, j) = -U.at(t, j);
        }
    }
    return res;
}

std::string AbelianGroup::str() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::string s;
    if (free_rank == 1)
        s = "Z";
    else if (free_rank > 1)
        s = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) {
        if (!s.empty()) s += " (+) ";
        s += "Z/" + d.get_str();
    }
    return s;
}

std::string AbelianGroup::to_json() const {
    nlohmann::ordered_json j;
    j["free_rank"] = free_rank;
    j["torsion"] = nlohmann::ordered_json::array();
    for (const auto& d : torsion) {
        if (d.fits_slong_p())
            j["torsion"].push_back(d.get_si());
        else
            j["torsion"].push_back(d.get_str());
    }
    return j.dump();
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t free_rank,
                                              std::vector<mpz_class> orders) {
    // Pairwise gcd/lcm reduction: replace (a, b) by (gcd, lcm) until every
    // pair satisfies the divisibility chain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < orders.size(); ++i)
            for (std::size_t j = i + 1; j < orders.size(); ++j) {
                if (orders[j] % orders[i] == 0) continue;
                mpz_class g = gcd(orders[i], orders[j]);
                mpz_class l = orders[i] / g * orders[j];
                orders[i] = g;
                orders[j] = l;
                changed = true;
            }
    }
    std::sort(orders.begin(), orders.end());
    AbelianGroup result;
    result.free_rank = free_rank;
    for (auto& d : orders)
        if (d > 1) result.torsion.push_back(std::move(d));
    return result;
}

AbelianGroup cokernel(const IntegerMatrix& A, std::size_t ambient_rank) {
    if (A.cols() > ambient_rank)
        throw DimensionMismatch("cokernel: matrix has more columns than ambient rank");
    auto snf = smith_normal_form(A);
    auto factors = snf.invariant_factors();
    AbelianGroup g;
    g.free_rank = ambient_rank - factors.size();
    for (auto& f : factors)
        if (f > 1) g.torsion.push_back(std::move(f));
    return g;
}

std::size_t matrix_rank(const IntegerMatrix& A) {
    return smith_normal_form(A).rank();
}

std::size_t kernel_rank(const IntegerMatrix& A) {
    return A.cols() - matrix_rank(A);
}

namespace {

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<mpz_class> minor_gcds(const IntegerMatrix& A, std::size_t max_size) {
    if (max_size > std::min(A.rows(), A.cols()))
        throw SizeLimitExceeded("minor size exceeds matrix dimensions");
    std::vector<mpz_class> deltas;
    for (std::size_t s = 1; s <= max_size; ++s) {
        mpz_class g = 0;
        combinations(A.rows(), s, [&](const std::vector<std::size_t>& ri) {
            combinations(A.cols(), s, [&](const std::vector<std::size_t>& ci) {
                IntegerMatrix sub(s, s);
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t j = 0; j < s; ++j) sub.at(i, j) = A.at(ri[i], ci[j]);
                g = gcd(g, sub.determinant());
            });
        });
        deltas.push_back(abs(g));
    }
    return deltas;
}

}  // namespace qlens
