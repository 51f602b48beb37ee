#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Error taxonomy shared by all modules. The CLI maps every one of these to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct UnsupportedError : Error {
    using Error::Error;
};
// Raised when an internal consistency check fails (a would-be theorem violation).
struct InternalError : Error {
    using Error::Error;
};

std::string to_string(const Rational& r);

using DimVector = std::vector<int>;
using Filtration = std::vector<DimVector>;

DimVector zero_vec(int n);
DimVector unit_vec(int n, int i);
DimVector add(const DimVector& a, const DimVector& b);
DimVector sub(const DimVector& a, const DimVector& b);
DimVector scale(int k, const DimVector& a);
bool leq(const DimVector& a, const DimVector& b);
bool is_nonneg(const DimVector& a);
bool is_zero(const DimVector& a);
int total(const DimVector& a);
std::string to_string(const DimVector& d);

// Filtration helpers: monotone, nonnegative, starting at zero.
bool is_filtration(const Filtration& f);
bool is_filtration_of(const Filtration& f, const DimVector& d);
std::string to_string(const Filtration& f);

// Rank over Q of a list of equal-length rows.
int rational_rank(std::vector<std::vector<Rational>> rows);

// Outcome of a verification battery; keeps the first failure.
struct CheckReport {
    bool pass = true;
    std::string detail;
    long long checks = 0;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

}  // namespace qh
