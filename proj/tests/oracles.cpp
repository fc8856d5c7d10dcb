// Copyright 2026 The lgrpauli Authors
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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace oracle {

namespace {

bool commute_bits(uint32_t a, uint32_t b, int n) {
    int s = 0;
    for (int i = 0; i < n; i++) {
        int az = a >> i & 1, ax = a >> (n + i) & 1;
        int bz = b >> i & 1, bx = b >> (n + i) & 1;
        s += az * bx + ax * bz;
    }
    return s % 2 == 0;
}

Matrix columns(const Matrix &rows, const std::vector<int> &cols) {
    Matrix out;
    for (const auto &r : rows) {
        std::vector<int> row;
        for (int c : cols) {
            row.push_back(r[c]);
        }
        out.push_back(row);
    }
    return out;
}

}  // namespace

int leibniz_det(const Matrix &m) {
    int n = int(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int sum = 0;
    do {
        int prod = 1;
        for (int i = 0; i < n && prod; i++) {
            prod &= m[i][perm[i]];
        }
        sum ^= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

std::vector<int> label_bits(const std::string &label) {
    int n = int(label.size());
    std::vector<int> v(2 * n, 0);
    for (int i = 0; i < n; i++) {
        char c = label[i];
        v[i] = (c == 'Z' || c == 'Y');
        v[n + i] = (c == 'X' || c == 'Y');
    }
    return v;
}

bool labels_commute(const std::string &a, const std::string &b) {
    int anti = 0;
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]) {
            anti++;
        }
    }
    return anti % 2 == 0;
}

std::set<std::vector<uint32_t>> brute_generators(int n) {
    if (n > 3) {
        throw std::invalid_argument("brute_generators: N <= 3 only");
    }
    uint32_t top = 1u << (2 * n);
    std::set<std::vector<uint32_t>> out;
    std::vector<uint32_t> pick;
    auto recurse = [&](auto &&self, uint32_t from) -> void {
        if (int(pick.size()) == n) {
            std::set<uint32_t> span;
            for (uint32_t combo = 1; combo < (1u << n); combo++) {
                uint32_t v = 0;
                for (int k = 0; k < n; k++) {
                    if (combo >> k & 1) {
                        v ^= pick[k];
                    }
                }
                span.insert(v);
            }
            if (!span.count(0) && span.size() == (1u << n) - 1) {
                out.insert(std::vector<uint32_t>(span.begin(), span.end()));
            }
            return;
        }
        for (uint32_t v = from; v < top; v++) {
            bool ok = true;
            for (uint32_t w : pick) {
                ok &= commute_bits(v, w, n);
            }
            if (ok) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        }
    };
    recurse(recurse, 1);
    return out;
}

std::vector<int> brute_pluecker(const Matrix &rows) {
    int n = int(rows.size());
    int width = int(rows[0].size());
    std::vector<int> out;
    for (uint32_t mask = 0; mask < (1u << width); mask++) {
        if (__builtin_popcount(mask) != n) {
            continue;
        }
        std::vector<int> cols;
        for (int c = 0; c < width; c++) {
            if (mask >> c & 1) {
                cols.push_back(c);
            }
        }
        out.push_back(leibniz_det(columns(rows, cols)));
    }
    return out;
}

std::vector<int> brute_projection(const Matrix &rows) {
    int n = int(rows.size());
    std::vector<int> out;
    for (uint32_t subset = 0; subset < (1u << n); subset++) {
        std::vector<int> cols;
        for (int j = 0; j < n; j++) {
            if (!(subset >> j & 1)) {
                cols.push_back(j);
            }
        }
        for (int j = 0; j < n; j++) {
            if (subset >> j & 1) {
                cols.push_back(n + j);
            }
        }
        out.push_back(leibniz_det(columns(rows, cols)));
    }
    return out;
}

std::set<uint64_t> brute_separable(int n) {
    static const int kVecs[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    std::set<uint64_t> out;
    int choices = 1;
    for (int a = 0; a < n; a++) {
        choices *= 3;
    }
    for (int c = 0; c < choices; c++) {
        std::vector<int> pick(n);
        int rest = c;
        for (int a = 0; a < n; a++) {
            pick[a] = rest % 3;
            rest /= 3;
        }
        uint64_t t = 0;
        for (uint32_t idx = 0; idx < (1u << n); idx++) {
            int prod = 1;
            for (int a = 0; a < n; a++) {
                prod &= kVecs[pick[a]][idx >> a & 1];
            }
            if (prod) {
                t |= uint64_t{1} << idx;
            }
        }
        out.insert(t);
    }
    return out;
}

std::vector<int> brute_t_ranks(int n) {
    std::set<uint64_t> seps = brute_separable(n);
    uint64_t count = uint64_t{1} << (1u << n);
    std::vector<int> rank(count, -1);
    rank[0] = 0;
    std::unordered_set<uint64_t> layer = {0};
    for (int k = 1; !layer.empty(); k++) {
        std::unordered_set<uint64_t> next;
        for (uint64_t v : layer) {
            for (uint64_t s : seps) {
                uint64_t w = v ^ s;
                if (rank[w] < 0) {
                    rank[w] = k;
                    next.insert(w);
                }
            }
        }
        layer = std::move(next);
    }
    return rank;
}

Matrix group_matrix(const std::vector<std::vector<int>> &factors, const std::vector<int> &perm) {
    int n = int(factors.size());
    int dim = 1 << n;
    auto move = [&](int idx) {
        int out = 0;
        for (int a = 0; a < n; a++) {
            if (idx >> a & 1) {
                out |= 1 << perm[a];
            }
        }
        return out;
    };
    Matrix m(dim, std::vector<int>(dim, 0));
    for (int c = 0; c < dim; c++) {
        for (int r = 0; r < dim; r++) {
            // Kronecker product entry F[r][c] = prod_a f_a[r_a][c_a].
            int prod = 1;
            for (int a = 0; a < n; a++) {
                int ra = r >> a & 1, ca = c >> a & 1;
                prod &= factors[a][2 * ra + ca];
            }
            if (prod) {
                m[move(r)][c] ^= 1;
            }
        }
    }
    return m;
}

uint64_t apply(const Matrix &m, uint64_t v) {
    uint64_t out = 0;
    for (size_t r = 0; r < m.size(); r++) {
        int acc = 0;
        for (size_t c = 0; c < m.size(); c++) {
            acc ^= m[r][c] & int(v >> c & 1);
        }
        if (acc) {
            out |= uint64_t{1} << r;
        }
    }
    return out;
}

std::vector<size_t> brute_orbit_sizes(int n) {
    if (n > 3) {
        throw std::invalid_argument("brute_orbit_sizes: N <= 3 only");
    }
    std::vector<std::vector<int>> gl2;
    for (int bits = 0; bits < 16; bits++) {
        std::vector<int> f = {bits & 1, bits >> 1 & 1, bits >> 2 & 1, bits >> 3 & 1};
        if ((f[0] * f[3] + f[1] * f[2]) % 2 == 1) {
            gl2.push_back(f);
        }
    }
    std::vector<Matrix> group;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int tuples = 1;
    for (int a = 0; a < n; a++) {
        tuples *= 6;
    }
    do {
        for (int t = 0; t < tuples; t++) {
            std::vector<std::vector<int>> factors;
            int rest = t;
            for (int a = 0; a < n; a++) {
                factors.push_back(gl2[rest % 6]);
                rest /= 6;
            }
            group.push_back(group_matrix(factors, perm));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    uint64_t top = uint64_t{1} << (1u << n);
    std::vector<bool> seen(top, false);
    std::vector<size_t> sizes;
    for (uint64_t v = 1; v < top; v++) {
        if (seen[v]) {
            continue;
        }
        std::set<uint64_t> orbit;
        for (const auto &g : group) {
            orbit.insert(apply(g, v));
        }
        for (uint64_t w : orbit) {
            seen[w] = true;
        }
        sizes.push_back(orbit.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

int brute_exclusive_rank(const Matrix &a) {
    int n = int(a.size());
    int best = 0;
    for (uint32_t rows = 1; rows < (1u << n); rows++) {
        for (uint32_t cols = 1; cols < (1u << n); cols++) {
            if ((rows & cols) || __builtin_popcount(rows) != __builtin_popcount(cols)) {
                continue;
            }
            std::vector<int> r, c;
            for (int k = 0; k < n; k++) {
                if (rows >> k & 1) {
                    r.push_back(k);
                }
                if (cols >> k & 1) {
                    c.push_back(k);
                }
            }
            Matrix sub;
            for (int i : r) {
                std::vector<int> row;
                for (int j : c) {
                    row.push_back(a[i][j]);
                }
                sub.push_back(row);
            }
            if (leibniz_det(sub)) {
                best = std::max(best, int(r.size()));
            }
        }
    }
    // Largest nonvanishing exclusive minor has size k exactly when all of
    // size k+1 vanish (a nonzero minor of size s has nonzero ones of every
    // smaller size by Laplace expansion).
    return best;
}

}  // namespace oracle
