#include "qh/common.hpp"

#include <algorithm>
#include <numeric>

namespace qh {

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

DimVector zero_vec(int n) { return DimVector(static_cast<size_t>(n), 0); }

DimVector unit_vec(int n, int i) {
    DimVector v = zero_vec(n);
    v.at(static_cast<size_t>(i)) = 1;
    return v;
}

static void check_same(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw DimensionError("dimension vectors of different length");
}

DimVector add(const DimVector& a, const DimVector& b) {
    check_same(a, b);
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVector sub(const DimVector& a, const DimVector& b) {
    check_same(a, b);
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

DimVector scale(int k, const DimVector& a) {
    DimVector r(a);
    for (auto& x : r) x *= k;
    return r;
}

bool leq(const DimVector& a, const DimVector& b) {
    check_same(a, b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_nonneg(const DimVector& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

bool is_zero(const DimVector& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

int total(const DimVector& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::string to_string(const DimVector& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

bool is_filtration(const Filtration& f) {
    if (f.empty() || !is_zero(f.front())) return false;
    for (const auto& step : f)
        if (!is_nonneg(step) || step.size() != f.front().size()) return false;
    for (size_t i = 0; i + 1 < f.size(); ++i)
        if (!leq(f[i], f[i + 1])) return false;
    return true;
}

bool is_filtration_of(const Filtration& f, const DimVector& d) {
    return is_filtration(f) && f.back() == d;
}

std::string to_string(const Filtration& f) {
    std::string s = "[";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += to_string(f[i]);
    }
    return s + "]";
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
    int rank = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[static_cast<size_t>(rank)]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<size_t>(rank) || rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[static_cast<size_t>(rank)][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[static_cast<size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace qh
