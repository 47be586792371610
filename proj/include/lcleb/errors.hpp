// Exception types shared by all lcleb modules.
#pragma once

#include <stdexcept>
#include <string>

namespace lcleb {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// m or n outside the accepted range (e.g. m = 0).
struct degree_error : error {
    using error::error;
};

// node-construction operations require gcd(m, n) = 1
struct coprime_error : error {
    using error::error;
};

// argument outside the function's domain (e.g. |u| > 1)
struct domain_error : error {
    using error::error;
};

// evaluation requested at an excluded singular point
struct singular_error : error {
    using error::error;
};

// asymptotic formula queried outside its regime (need 3 <= m <= n)
struct regime_error : error {
    using error::error;
};

// sweep size exceeds the configured cap
struct cap_error : error {
    using error::error;
};

// malformed quadrature/search spec or inconsistent sample map
struct spec_error : error {
    using error::error;
};

} // namespace lcleb
