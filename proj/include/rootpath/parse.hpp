/*
   Copyright 2026 The rootpath Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rootpath/poly.hpp"

namespace rootpath {

namespace detail {

// Full-token double parse; tolerates one leading '+' (std::from_chars does
// not). "inf"/"nan" are rejected later by the finiteness check.
inline bool parse_full_double(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace detail

/// Complex literal, shell-friendly and space-free: "1.5", "-2i", "1.5-2i",
/// "3e-2+0.5i". A bare "i" (optionally signed) means a unit imaginary part.
inline Complex parse_complex_literal(std::string_view token) {
    const auto fail = [&]() -> Complex {
        throw Error(Errc::parse_error, "bad complex literal '" + std::string(token) + "'");
    };
    if (token.empty()) return fail();

    if (token.back() != 'i') {
        double re = 0.0;
        if (!detail::parse_full_double(token, re)) return fail();
        return {re, 0.0};
    }

    std::string_view body = token.substr(0, token.size() - 1);
    // split before the sign of the imaginary part; signs directly after an
    // exponent marker belong to the real literal
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }

    double re = 0.0;
    std::string_view im_part = body;
    if (split != std::string_view::npos) {
        if (!detail::parse_full_double(body.substr(0, split), re)) return fail();
        im_part = body.substr(split);
    }

    double im = 0.0;
    if (im_part.empty() || im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else if (!detail::parse_full_double(im_part, im)) {
        return fail();
    }
    return {re, im};
}

/// Comma-separated coefficient list, ascending degree.
inline std::vector<Complex> parse_coefficient_list(std::string_view csv) {
    std::vector<Complex> out;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = csv.find(',', begin);
        const std::string_view token =
            csv.substr(begin, comma == std::string_view::npos ? comma : comma - begin);
        if (token.empty())
            throw Error(Errc::parse_error,
                        "empty coefficient at position " + std::to_string(out.size()));
        out.push_back(parse_complex_literal(token));
        if (comma == std::string_view::npos) break;
        begin = comma + 1;
    }
    return out;
}

inline std::string format_complex(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real();
    if (z.imag() >= 0.0) os << '+';
    os << z.imag() << 'i';
    return os.str();
}

}  // namespace rootpath
