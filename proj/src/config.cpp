// Copyright 2026 The gauge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "gauge/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace gauge {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

int parse_int(const std::string& s, const std::string& what) {
    std::string t = trim(s);
    if (t.empty()) throw ConfigError(what + ": empty value");
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        throw ConfigError(what + ": '" + t + "' is not an integer");
    }
    if (used != t.size()) throw ConfigError(what + ": '" + t + "' is not an integer");
    return v;
}

}  // namespace

GroupSpec parse_group(const std::string& s) {
    std::vector<int> orders;
    for (const auto& part : split(s, ',')) {
        int o = parse_int(part, "--group");
        if (o < 2) throw ConfigError("--group: cyclic orders must be >= 2, got " + std::to_string(o));
        orders.push_back(o);
    }
    if (orders.empty()) throw ConfigError("--group: give cyclic orders, e.g. --group 2,2");
    try {
        return GroupSpec(orders);
    } catch (const SpecError& e) {
        throw ConfigError(std::string("--group: ") + e.what());
    }
}

Cocycle parse_twist(const GroupSpec& g, const std::string& s) {
    const int k = g.rank();
    std::vector<int> upper(static_cast<size_t>(k * (k - 1) / 2), 0);
    if (trim(s).empty()) return Cocycle(g, upper);
    for (const auto& item : split(s, ',')) {
        std::string t = trim(item);
        auto eq = t.find('=');
        if (t.size() < 4 || t[0] != 'p' || eq == std::string::npos || eq < 3)
            throw ConfigError("twist: expected entries like p12=1, got '" + t + "'");
        std::string idx = t.substr(1, eq - 1);
        int i = 0, j = 0;
        if (idx.find('_') != std::string::npos) {
            auto ij = split(idx, '_');
            if (ij.size() != 2) throw ConfigError("twist: bad index in '" + t + "'");
            i = parse_int(ij[0], "twist");
            j = parse_int(ij[1], "twist");
        } else {
            if (idx.size() != 2) throw ConfigError("twist: use p<i><j> or p<i>_<j>, got '" + t + "'");
            i = idx[0] - '0';
            j = idx[1] - '0';
        }
        if (i < 1 || j <= i || j > k)
            throw ConfigError("twist: need 1 <= i < j <= " + std::to_string(k) + " in '" + t + "'");
        int v = parse_int(t.substr(eq + 1), "twist");
        // Row-major position of (i-1, j-1) among pairs i<j.
        int a = i - 1, b = j - 1, pos = 0;
        for (int r = 0; r < a; ++r) pos += k - 1 - r;
        pos += b - a - 1;
        upper[pos] = v;
    }
    try {
        return Cocycle(g, upper);
    } catch (const SpecError& e) {
        throw ConfigError(std::string("twist: ") + e.what());
    }
}

std::vector<GroupElement> parse_subgroup(const GroupSpec& g, const std::string& s) {
    std::string t = trim(s);
    if (t == "e" || t.empty()) return {GroupElement::identity(g)};
    if (t == "all") return elements(g);
    std::vector<GroupElement> h;
    for (const auto& item : split(t, ';')) {
        Exps e;
        for (const auto& x : split(item, ',')) e.push_back(parse_int(x, "--subgroup"));
        if (static_cast<int>(e.size()) != g.rank())
            throw ConfigError("--subgroup: '" + item + "' needs " + std::to_string(g.rank()) + " exponents");
        if (!g.contains(e)) throw ConfigError("--subgroup: '" + item + "' is not an element of " + g.str());
        GroupElement el(g, e);
        if (std::find(h.begin(), h.end(), el) == h.end()) h.push_back(el);
    }
    if (!is_subgroup(g, h))
        throw ConfigError("--subgroup: the listed elements are not closed under multiplication; list the whole "
                          "subgroup, identity included, or use 'e' / 'all'");
    std::sort(h.begin(), h.end());
    return h;
}

std::pair<Boundary, Boundary> parse_bc(const std::string& s) {
    if (s == "torus") return {Boundary::Periodic, Boundary::Periodic};
    if (s == "cylinder" || s == "periodic") return {Boundary::Open, Boundary::Periodic};
    if (s == "open") return {Boundary::Open, Boundary::Open};
    throw ConfigError("--bc: expected torus, cylinder (alias periodic) or open, got '" + s + "'");
}

uint64_t max_dim_from_env(uint64_t fallback) {
    const char* v = std::getenv("GAUGE_MAX_DIM");
    if (!v || !*v) return fallback;
    std::string t = trim(v);
    try {
        if (t.rfind("2^", 0) == 0) {
            int k = parse_int(t.substr(2), "GAUGE_MAX_DIM");
            if (k < 1 || k > 62) throw ConfigError("GAUGE_MAX_DIM: exponent out of range");
            return uint64_t(1) << k;
        }
        size_t used = 0;
        unsigned long long x = std::stoull(t, &used);
        if (used != t.size() || x == 0) throw ConfigError("");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("GAUGE_MAX_DIM: expected a positive integer or 2^k, got '" + t + "'");
    }
}

ResolvedConfig resolve(const RunConfig& c) {
    ResolvedConfig r;
    r.raw = c;
    r.group = parse_group(c.group);
    if (c.n < 2) throw ConfigError("--n: need at least 2 sites per row");
    if (c.m < 1) throw ConfigError("--m: need at least 1 layer");
    std::tie(r.vertical, r.horizontal) = parse_bc(c.bc);
    if (r.vertical == Boundary::Periodic && (c.m < 2 || c.m % 2 != 0))
        throw ConfigError("--m: a torus needs an even number of rows >= 2");
    r.alpha = parse_twist(r.group, c.twist_even);
    r.gamma = parse_twist(r.group, c.twist_odd);
    r.beta = parse_twist(r.group, c.twist_beta);
    r.subgroup = parse_subgroup(r.group, c.subgroup);
    if (c.element < 0 || c.element >= r.group.order())
        throw ConfigError("--element: index must be in [0, " + std::to_string(r.group.order()) + ")");
    if (c.character < 0 || c.character >= r.group.order())
        throw ConfigError("--character: index must be in [0, " + std::to_string(r.group.order()) + ")");
    if (c.max_dim == 0) throw ConfigError("--max-dim: must be positive");
    if (!(c.tolerance > 0.0) || c.tolerance > 1e-3) throw ConfigError("--tol: must be in (0, 1e-3]");
    if (c.threads < 0) throw ConfigError("--threads: must be >= 0");
    return r;
}

}  // namespace gauge
