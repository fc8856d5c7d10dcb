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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion with the
// measured values; exits 1 if any criterion fails. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lgrpauli/group.hpp"
#include "lgrpauli/ideal.hpp"
#include "lgrpauli/orbits.hpp"
#include "lgrpauli/pauli.hpp"
#include "lgrpauli/pluecker.hpp"
#include "lgrpauli/projection.hpp"
#include "lgrpauli/reference_data.hpp"
#include "oracles.hpp"

using namespace lgrpauli;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string &detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
    failures += !ok;
}

template <class T>
std::string join(const T &items) {
    std::ostringstream s;
    bool first = true;
    for (const auto &x : items) {
        s << (first ? "" : ",") << x;
        first = false;
    }
    return s.str();
}

oracle::Matrix dense(const BinMat &m) {
    oracle::Matrix out(m.rows(), std::vector<int>(m.cols()));
    for (size_t i = 1; i <= m.rows(); i++) {
        for (size_t j = 1; j <= m.cols(); j++) {
            out[i - 1][j - 1] = m.get(i, j);
        }
    }
    return out;
}

std::set<uint64_t> encodings(const std::vector<ProjPoint> &pts) {
    std::set<uint64_t> out;
    for (const auto &p : pts) {
        out.insert(p.encoding());
    }
    return out;
}

// 1. Generator counts.
void generator_counts() {
    std::vector<size_t> got;
    for (size_t n = 2; n <= 5; n++) {
        got.push_back(enumerate_generators(n).size());
    }
    bool ok = got == std::vector<size_t>{15, 135, 2295, 75735};
    // Independent count for N <= 3.
    ok &= oracle::brute_generators(2).size() == 15 && oracle::brute_generators(3).size() == 135;
    report(1, ok, "counts N=2..5 = " + join(got) + " (expected 15,135,2295,75735)");
}

// 2. Injectivity of project . embed, lift round trip.
void bijectivity() {
    bool ok = true;
    std::string detail;
    for (size_t n = 2; n <= 5; n++) {
        auto gens = enumerate_generators(n);
        std::set<uint64_t> seen;
        for (const auto &g : gens) {
            seen.insert(project(embed(g)).encoding());
        }
        bool inj = seen.size() == gens.size();
        ok &= inj;
        detail += "N=" + std::to_string(n) + " " + std::to_string(seen.size()) + "/" + std::to_string(gens.size()) +
                  (inj ? " injective" : " NOT injective");
        if (n <= 4) {
            size_t bad = 0;
            for (const auto &g : gens) {
                bad += lift(project(embed(g))) != g;
            }
            ok &= bad == 0;
            detail += ", lift failures " + std::to_string(bad);
        }
        if (n < 5) {
            detail += "; ";
        }
    }
    report(2, ok, detail);
}

// 3. Image equals zero set of the quadrics.
void image_identification() {
    bool ok = true;
    std::string detail;

    auto img2 = encodings(image(2));
    bool all2 = img2.size() == 15;
    ok &= all2;
    detail += "N=2 image " + std::to_string(img2.size()) + "/15 points; ";

    // Zero sets by a plain scan here, independent of zero_set().
    for (size_t n = 3; n <= 4; n++) {
        std::vector<QuadForm> forms;
        for (const auto &q : paper_quadrics(n)) {
            if (q.name != "Q0") {
                forms.push_back(q.form);
            }
        }
        std::set<uint64_t> zeros;
        for (uint64_t e = 1; e < (uint64_t{1} << (size_t{1} << n)); e++) {
            ProjPoint p(n, e);
            if (std::none_of(forms.begin(), forms.end(), [&](const QuadForm &q) { return q.eval(p); })) {
                zeros.insert(e);
            }
        }
        auto img = encodings(image(n));
        bool eq = zeros == img;
        size_t expect = n == 3 ? 135 : 2295;
        ok &= eq && zeros.size() == expect;
        detail += "N=" + std::to_string(n) + " zero set " + std::to_string(zeros.size()) + ", image " +
                  std::to_string(img.size()) + (eq ? ", equal" : ", DIFFERENT") + "; ";
    }
    QuadForm q0 = paper_quadric(4, "Q0");
    size_t q0_bad = 0;
    for (const auto &p : image(4)) {
        q0_bad += q0.eval(p);
    }
    ok &= q0_bad == 0 && q0 == paper_quadric(4, "Q9") + paper_quadric(4, "Q10");
    detail += "Q0 nonzero on " + std::to_string(q0_bad) + " image points";
    report(3, ok, detail);
}

// 4. Relation and constraint counts.
void relation_counts() {
    size_t three = 0, four = 0;
    for (const auto &r : pluecker_relations(3)) {
        three += r.terms.size() == 3;
        four += r.terms.size() == 4;
    }
    std::vector<size_t> ranks;
    for (size_t n = 2; n <= 4; n++) {
        ranks.push_back(rank(constraint_matrix(n)));
    }
    BinVec sum(binomial(8, 4));
    size_t short_count = 0;
    for (const auto &c : lagrangian_constraints(4)) {
        if (c.terms.size() == 3) {
            short_count++;
            for (const auto &s : c.terms) {
                sum.flip(subset_rank(s.key()) + 1);
            }
        }
    }
    bool ok = three == 30 && four == 5 && ranks == std::vector<size_t>{1, 6, 27} && short_count == 4 && sum.is_zero();
    report(4, ok,
           "N=3 relations " + std::to_string(three) + " three-term + " + std::to_string(four) +
               " four-term; constraint ranks " + join(ranks) + "; N=4 three-term constraints " +
               std::to_string(short_count) + (sum.is_zero() ? " sum to zero" : " do NOT sum to zero"));
}

// 5. Orbit stratification.
void stratification() {
    bool ok = true;
    std::string detail;
    for (size_t n = 2; n <= 4; n++) {
        auto recs = orbit_partition(n);
        std::vector<size_t> all, img;
        size_t img_total = 0;
        for (const auto &r : recs) {
            all.push_back(r.size);
            if (r.in_image) {
                img.push_back(r.size);
                img_total += r.size;
            }
        }
        std::sort(all.begin(), all.end());
        std::sort(img.begin(), img.end());
        if (n == 2) {
            ok &= all == std::vector<size_t>{6, 9} && img == all;
        } else if (n == 3) {
            ok &= all == std::vector<size_t>{12, 27, 54, 54, 108} && img == std::vector<size_t>{27, 54, 54};
        } else {
            ok &= all.size() == 29 && img == std::vector<size_t>{81, 108, 162, 324, 648, 972} && img_total == 2295;
        }
        if (n <= 3) {
            ok &= all == oracle::brute_orbit_sizes(int(n));
        }
        detail += "N=" + std::to_string(n) + " " + std::to_string(all.size()) + " orbits, image {" + join(img) +
                  "} total " + std::to_string(img_total) + "; ";
    }
    report(5, ok, detail + "N<=3 sizes cross-checked against the full-group oracle");
}

// 6. Table rows.
void tables() {
    size_t rows = 0, good = 0;
    std::string bad;
    std::vector<std::vector<int>> tr(5);
    for (int n = 2; n <= 4; n++) {
        tr[n] = oracle::brute_t_ranks(n);
    }
    for (size_t n = 2; n <= 4; n++) {
        const OrbitPartition &part = orbit_data(n);
        for (const auto &k : known_image_orbits(n)) {
            rows++;
            ProjPoint rep = k.representative(n);
            size_t size = part.record_of(rep).size;
            std::string obs = to_observable(rep).label();
            int t = tr[n][rep.encoding()];
            // E-rank: move onto the chart inside the orbit, then the largest
            // nonvanishing disjoint minor by brute force.
            ProjPoint on = transport_to_chart(rep);
            bool same_orbit = part.orbit_id(on) == part.orbit_id(rep);
            int e = oracle::brute_exclusive_rank(dense(chart_matrix(on).entries));
            bool ok = size == k.size && obs == k.observable && t == k.t_rank && e == k.e_rank && same_orbit;
            good += ok;
            if (!ok) {
                bad += " " + k.label + "(N=" + std::to_string(n) + ": size " + std::to_string(size) + " obs " + obs +
                       " T " + std::to_string(t) + " E " + std::to_string(e) + ")";
            }
        }
    }
    report(6, rows == 11 && good == rows,
           std::to_string(good) + "/" + std::to_string(rows) + " rows match size, observable, T-rank, E-rank" + bad);
}

// 7. Cayley quadric and its orbit.
void cayley() {
    bool n3 = cayley_quadric(3) == paper_quadric(3, "Q");
    auto orb = quadric_orbit(cayley_quadric(4), 4);
    std::set<QuadForm> got(orb.begin(), orb.end());
    std::set<QuadForm> want;
    for (const char *name : {"Q0", "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8"}) {
        want.insert(paper_quadric(4, name));
    }
    bool q8 = cayley_quadric(4) == paper_quadric(4, "Q8");
    bool no9 = !got.count(paper_quadric(4, "Q9"));
    bool no10 = !got.count(paper_quadric(4, "Q10"));
    bool exact = got == want;
    std::vector<QuadForm> want_v(want.begin(), want.end());
    std::vector<QuadForm> both = orb;
    both.insert(both.end(), want_v.begin(), want_v.end());
    size_t r_orb = span_rank(orb), r_want = span_rank(want_v), r_both = span_rank(both);
    size_t shared = 0;
    for (const auto &q : want) {
        shared += got.count(q);
    }
    report(7, n3 && q8 && no9 && no10 && exact,
           std::string("N=3 Cayley quadric ") + (n3 ? "equals" : "differs from") + " Q; N=4 Cayley quadric " +
               (q8 ? "is" : "is not") + " Q8; orbit has " + std::to_string(got.size()) + " forms, " +
               std::to_string(shared) + " of {Q0..Q8}; Q9 " + (no9 ? "absent" : "present") + ", Q10 " +
               (no10 ? "absent" : "present") + "; exact set equality " + (exact ? "holds" : "does not hold") +
               " (linear spans: orbit " + std::to_string(r_orb) + ", {Q0..Q8} " + std::to_string(r_want) +
               ", joint " + std::to_string(r_both) + ")");
}

// 8. Property suites.
void properties() {
    std::vector<std::string> failed;

    // Symplectic form alternating and bilinear, N <= 2 exhaustive.
    bool sigma = true;
    for (size_t n = 1; n <= 2; n++) {
        uint64_t top = uint64_t{1} << (2 * n);
        for (uint64_t a = 0; a < top; a++) {
            sigma &= !symplectic_product_packed(a, a, n);
            for (uint64_t b = 0; b < top; b++) {
                for (uint64_t c = 0; c < top; c++) {
                    sigma &= symplectic_product_packed(a, b ^ c, n) ==
                             (symplectic_product_packed(a, b, n) != symplectic_product_packed(a, c, n));
                }
            }
        }
    }
    if (!sigma) {
        failed.push_back("sigma");
    }

    bool ypar = true;
    for (size_t n = 1; n <= 4; n++) {
        for (uint64_t w = 1; w < (uint64_t{1} << (2 * n)); w++) {
            PauliPoint p(n, BinVec::from_word(w, 2 * n));
            std::string l = p.label();
            ypar &= quad_form(p) == (std::count(l.begin(), l.end(), 'Y') % 2 == 1);
        }
    }
    if (!ypar) {
        failed.push_back("y-parity");
    }

    bool annihilate = true;
    for (size_t n = 2; n <= 4; n++) {
        auto rels = pluecker_relations(n);
        auto cons = lagrangian_constraints(n);
        for (const auto &g : enumerate_generators(n)) {
            PlueckerVec v = embed(g);
            for (const auto &r : rels) {
                annihilate &= !r.evaluate(v);
            }
            for (const auto &c : cons) {
                annihilate &= !c.evaluate(v);
            }
        }
    }
    if (!annihilate) {
        failed.push_back("relations");
    }

    bool tconst = true;
    for (int n = 2; n <= 3; n++) {
        auto tr = oracle::brute_t_ranks(n);
        const OrbitPartition &part = orbit_data(n);
        for (const auto &r : part.records()) {
            for (const auto &p : part.members(r.orbit_id)) {
                tconst &= t_rank(p) == r.t_rank && tr[p.encoding()] == r.t_rank;
            }
        }
    }
    if (!tconst) {
        failed.push_back("t-rank");
    }

    bool econst = true;
    for (size_t n = 2; n <= 4; n++) {
        const OrbitPartition &part = orbit_data(n);
        for (const auto &r : part.records()) {
            if (!r.in_image) {
                continue;
            }
            std::set<int> seen;
            for (const auto &p : part.members(r.orbit_id)) {
                if (p.at_key(0)) {
                    seen.insert(exclusive_rank(chart_matrix(p)));
                }
            }
            econst &= seen.size() == 1;
        }
    }
    if (!econst) {
        failed.push_back("e-rank");
    }

    bool even_y = true;
    for (size_t n = 3; n <= 4; n++) {
        for (const auto &p : image(n)) {
            std::string l = to_observable(p).label();
            even_y &= std::count(l.begin(), l.end(), 'Y') % 2 == 0;
        }
    }
    if (!even_y) {
        failed.push_back("even-y");
    }

    report(8, failed.empty(),
           failed.empty() ? std::string("sigma, y-parity, relations, t-rank, e-rank, even-y all hold")
                          : "failed: " + join(failed));
}

// 9. Excluded items; the N=5 pairing check is reported, not asserted.
void excluded() {
    QuadForm q = pairing_quadric(5);
    size_t nonzero = 0, total = 0;
    for (const auto &p : image(5)) {
        total++;
        nonzero += q.eval(p);
    }
    report(9, total == 75735,
           "ideal primality not tested; no N=5 equations derived; N=5 pairing quadric is nonzero on " +
               std::to_string(nonzero) + " of " + std::to_string(total) + " image points (reported only)");
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    generator_counts();
    bijectivity();
    image_identification();
    relation_counts();
    stratification();
    tables();
    cayley();
    properties();
    excluded();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("acceptance: %d failing criteria, %.1f s\n", failures, secs);
    return failures == 0 ? 0 : 1;
}
