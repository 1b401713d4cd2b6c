/*
 * Copyright 2026 The zising authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ZISING_CORE_HPP
#define ZISING_CORE_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace zising {

using cxd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Signaled when a function is evaluated at (or within pole_tol of) a pole.
class pole_error : public std::domain_error {
public:
    pole_error(const std::string& what, cxd where)
        : std::domain_error(what), where_(where) {}
    cxd where() const { return where_; }

private:
    cxd where_;
};

/// Distance below which an argument counts as sitting on a pole.
inline constexpr double pole_tol = 1e-9;

inline bool finite(cxd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// x reduced into [0, p).
inline double mod_pos(double x, double p) {
    double r = std::fmod(x, p);
    if (r < 0) r += p;
    return r;
}

/// Signed distance of x to the nearest multiple of p, in [-p/2, p/2).
inline double mod_centered(double x, double p) {
    double r = mod_pos(x, p);
    return (r >= p / 2) ? r - p : r;
}

inline double sq(double x) { return x * x; }

}  // namespace zising

#endif  // ZISING_CORE_HPP
