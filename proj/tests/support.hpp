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

#include <string>
#include <vector>

#include "rootpath/rootpath.hpp"

namespace testsupport {

using rootpath::Complex;
using rootpath::Polynomial;

inline Polynomial poly_re(std::vector<double> coeffs) {
    std::vector<Complex> c;
    c.reserve(coeffs.size());
    for (double v : coeffs) c.emplace_back(v, 0.0);
    return Polynomial(std::move(c));
}

/// Power-sum evaluation, the slow reference against Horner.
inline Complex naive_evaluate(const Polynomial& p, Complex z) {
    Complex acc{0.0, 0.0};
    Complex zk{1.0, 0.0};
    for (const Complex& a : p.coeffs()) {
        acc += a * zk;
        zk *= z;
    }
    return acc;
}

inline std::vector<Complex> flatten(const rootpath::RootResult& result) {
    std::vector<Complex> out;
    for (const auto& rec : result.roots)
        for (int k = 0; k < rec.multiplicity; ++k) out.push_back(rec.value);
    return out;
}

/// Minimal XML well-formedness check: prolog allowed, one root element,
/// balanced nesting, quoted attribute values, no stray '<' or '&'.
inline bool xml_well_formed(const std::string& text, std::string* why = nullptr) {
    const auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<std::string> stack;
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool seen_root = false;
    bool after_root = false;
    while (i < n) {
        const char ch = text[i];
        if (ch == '<') {
            if (i + 1 >= n) return fail("dangling '<'");
            if (text[i + 1] == '?') {  // prolog / processing instruction
                const std::size_t end = text.find("?>", i);
                if (end == std::string::npos) return fail("unterminated processing instruction");
                i = end + 2;
                continue;
            }
            const bool closing = text[i + 1] == '/';
            std::size_t j = i + (closing ? 2 : 1);
            std::size_t name_start = j;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '-' ||
                             text[j] == '_' || text[j] == ':'))
                ++j;
            const std::string name = text.substr(name_start, j - name_start);
            if (name.empty()) return fail("tag without a name");
            // scan attributes until '>' respecting quotes
            bool self_closing = false;
            while (j < n && text[j] != '>') {
                if (text[j] == '"') {
                    const std::size_t q = text.find('"', j + 1);
                    if (q == std::string::npos) return fail("unterminated attribute value");
                    j = q + 1;
                    continue;
                }
                if (text[j] == '<') return fail("'<' inside a tag");
                if (text[j] == '/' && j + 1 < n && text[j + 1] == '>') {
                    self_closing = true;
                }
                ++j;
            }
            if (j >= n) return fail("unterminated tag");
            if (closing) {
                if (self_closing) return fail("closing tag cannot self-close");
                if (stack.empty() || stack.back() != name)
                    return fail("mismatched closing tag </" + name + ">");
                stack.pop_back();
                if (stack.empty()) after_root = true;
            } else {
                if (after_root) return fail("content after the root element");
                if (stack.empty() && seen_root && !self_closing) return fail("second root element");
                seen_root = true;
                if (!self_closing) stack.push_back(name);
                else if (stack.empty()) after_root = true;
            }
            i = j + 1;
            continue;
        }
        if (ch == '&') {
            static const char* entities[] = {"&amp;", "&lt;", "&gt;", "&quot;", "&apos;"};
            bool ok = false;
            for (const char* e : entities)
                if (text.compare(i, std::char_traits<char>::length(e), e) == 0) ok = true;
            if (!ok) return fail("raw '&' in character data");
        }
        if (ch == '>') return fail("stray '>' outside markup");
        if (stack.empty() && !std::isspace(static_cast<unsigned char>(ch)))
            return fail("character data outside the root element");
        ++i;
    }
    if (!stack.empty()) return fail("unclosed element <" + stack.back() + ">");
    if (!seen_root) return fail("no root element");
    return true;
}

/// Count occurrences of a substring.
inline int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace testsupport
