#include "mvone/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mvone {

std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

int rank_of(Mat rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            // integer cross elimination; rank is all we need
            Int a = rows[r][c], b = rows[i][c];
            for (std::size_t j = c; j < n; ++j) rows[i][j] = rows[i][j] * a - rows[r][j] * b;
        }
        ++r;
    }
    return static_cast<int>(r);
}

Int det_int(Mat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Mat identity(int n) {
    Mat m(static_cast<std::size_t>(n), zero_vec(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat r(n, Vec(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    Vec r(m.size(), Int(0));
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat r(m[0].size(), Vec(m.size(), Int(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}

Mat unimodular_inverse(const Mat& m) {
    const int n = static_cast<int>(m.size());
    Int d = det_int(m);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    // adjugate via cofactors; n stays small throughout this project
    Mat inv(static_cast<std::size_t>(n), zero_vec(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Mat minor;
            minor.reserve(static_cast<std::size_t>(n - 1));
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                Vec row;
                row.reserve(static_cast<std::size_t>(n - 1));
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                minor.push_back(std::move(row));
            }
            Int cof = det_int(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cof / d;
        }
    }
    return inv;
}

HnfResult row_echelon_transform(const Mat& a) {
    HnfResult res;
    const std::size_t n = a.size();
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    Mat h = a;
    Mat u = identity(static_cast<int>(n));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        // euclidean reduction within the column
        while (true) {
            std::size_t piv = n;
            for (std::size_t i = r; i < n; ++i) {
                if (h[i][c] != 0 && (piv == n || abs(h[i][c]) < abs(h[piv][c]))) piv = i;
            }
            if (piv == n) break;
            std::swap(h[r], h[piv]);
            std::swap(u[r], u[piv]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (h[i][c] == 0) continue;
                Int q = h[i][c] / h[r][c];
                for (std::size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
                for (std::size_t j = 0; j < n; ++j) u[i][j] -= q * u[r][j];
                if (h[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h[r][c] != 0) {
            if (h[r][c] < 0) {
                for (std::size_t j = 0; j < cols; ++j) h[r][j] = -h[r][j];
                for (std::size_t j = 0; j < n; ++j) u[r][j] = -u[r][j];
            }
            ++r;
        }
    }
    res.transform = std::move(u);
    res.echelon = std::move(h);
    res.rank = static_cast<int>(r);
    return res;
}

Vec primitive_nullvector(const Mat& rows) {
    const std::size_t d = rows.empty() ? 1 : rows[0].size();
    assert(rows.size() + 1 == d);
    Vec nu(d, Int(0));
    for (std::size_t j = 0; j < d; ++j) {
        Mat minor;
        minor.reserve(rows.size());
        for (const auto& row : rows) {
            Vec r;
            r.reserve(d - 1);
            for (std::size_t c = 0; c < d; ++c)
                if (c != j) r.push_back(row[c]);
            minor.push_back(std::move(r));
        }
        Int cof = det_int(minor);
        if (j % 2 == 1) cof = -cof;
        nu[j] = cof;
    }
    Int g = gcd_vec(nu);
    if (g == 0) throw std::invalid_argument("rows do not have rank d-1");
    for (auto& x : nu) x /= g;
    return nu;
}

bool lp_feasible(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
    const std::size_t m = a.size();
    if (m == 0) return true;
    const std::size_t n = a[0].size();
    // tableau with artificial basis; phase-one objective = sum of artificials
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    std::vector<Rat> z(n + m + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n + m; ++j) z[j] += t[i][j];
    while (true) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (z[j] > 0 && !(j >= n && j < n + m)) { enter = j; break; }  // Bland: first index
        }
        if (enter == n + m) break;
        std::size_t leave = m;
        Rat best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break;  // unbounded phase-one cannot happen; be safe
        const Rat piv = t[leave][enter];
        for (std::size_t j = 0; j <= n + m; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rat f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            const Rat f = z[enter];
            for (std::size_t j = 0; j <= n + m; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return z[n + m] == 0;
}

std::optional<std::vector<Rat>> solve_linear(const std::vector<std::vector<Rat>>& a,
                                             const std::vector<Rat>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[c], m[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

}  // namespace mvone
