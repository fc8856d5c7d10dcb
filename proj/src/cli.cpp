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

#include "lgrpauli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lgrpauli/errors.hpp"
#include "lgrpauli/group.hpp"
#include "lgrpauli/ideal.hpp"
#include "lgrpauli/orbits.hpp"
#include "lgrpauli/parallel.hpp"
#include "lgrpauli/pluecker.hpp"
#include "lgrpauli/projection.hpp"
#include "lgrpauli/reference_data.hpp"

namespace lgrpauli::cli {

using nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
    std::string out;
    for (size_t k = 0; k < parts.size(); k++) {
        if (k > 0) {
            out += sep;
        }
        out += parts[k];
    }
    return out;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void require_range(size_t n, size_t lo, size_t hi, const std::string &command) {
    if (n < lo || n > hi) {
        throw RangeError(command + " needs " + std::to_string(lo) + " <= N <= " + std::to_string(hi) + ", got " +
                         std::to_string(n));
    }
}

std::vector<std::string> basis_labels(const Generator &g) {
    std::vector<std::string> out;
    for (const auto &r : g.basis().row_list()) {
        out.push_back(PauliPoint(g.n_qubits(), r).label());
    }
    return out;
}

std::vector<std::string> point_labels(const Generator &g) {
    std::vector<std::string> out;
    for (const auto &p : generator_points(g)) {
        out.push_back(p.label());
    }
    return out;
}

std::string opt_int(const std::optional<int> &v) { return v ? std::to_string(*v) : "-"; }

std::vector<PauliPoint> parse_ops(const std::string &ops) {
    std::vector<PauliPoint> out;
    std::stringstream ss(ops);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(PauliPoint::parse(item));
    }
    if (out.empty()) {
        throw ParseError("no operators given");
    }
    return out;
}

// One assertion of a verification suite.
struct Check {
    std::string suite;
    std::string name;
    std::string measured;
    // "PASS", "FAIL" or "INFO" (reported, not asserted).
    std::string status;
};

Check check(const std::string &suite, const std::string &name, const std::string &measured, bool ok) {
    return {suite, name, measured, ok ? "PASS" : "FAIL"};
}

Check info(const std::string &suite, const std::string &name, const std::string &measured) {
    return {suite, name, measured, "INFO"};
}

std::string sizes_string(const std::vector<size_t> &sizes) {
    std::vector<std::string> parts;
    for (size_t s : sizes) {
        parts.push_back(std::to_string(s));
    }
    return "{" + join(parts, ",") + "}";
}

std::vector<Check> suite_bijection(size_t n) {
    const std::string s = "bijection";
    std::vector<Check> out;
    const ImageTable &table = image_table(n);
    size_t gens = table.generators().size();
    out.push_back(check(s, "generator count", std::to_string(gens) + " == " + std::to_string(generator_count(n)),
                        gens == generator_count(n)));
    out.push_back(check(s, "project o embed injective",
                        std::to_string(table.sorted_points().size()) + " distinct images of " + std::to_string(gens),
                        table.injective() && table.sorted_points().size() == gens));
    size_t round_trips = 0;
    for (size_t k = 0; k < gens; k++) {
        if (lift(table.points()[k]) == table.generators()[k]) {
            round_trips++;
        }
    }
    out.push_back(check(s, "lift round-trip", std::to_string(round_trips) + "/" + std::to_string(gens),
                        round_trips == gens));
    size_t chart_points = 0;
    size_t consistent = 0;
    for (const auto &p : table.sorted_points()) {
        if (!p.at_key(0)) {
            continue;
        }
        chart_points++;
        ChartMatrix a = chart_matrix(p);
        bool ok = true;
        for (uint32_t key = 0; key < p.dimension(); key++) {
            ok &= a.principal_minor(key) == p.at_key(key);
        }
        consistent += ok;
    }
    out.push_back(check(s, "chart principal minors reproduce the point",
                        std::to_string(consistent) + "/" + std::to_string(chart_points), consistent == chart_points));
    return out;
}

std::vector<Check> suite_variety(size_t n) {
    const std::string s = "variety";
    std::vector<Check> out;
    if (n == 5) {
        QuadForm pairing = pairing_quadric(5);
        size_t nonzero = 0;
        for (const auto &p : image(5)) {
            nonzero += pairing.eval(p);
        }
        out.push_back(info(s, "pairing quadric on the N=5 image",
                           std::to_string(nonzero) + " of " + std::to_string(image(5).size()) + " image points give 1"));
        return out;
    }
    VarietyReport r = verify_variety(n);
    if (n == 2) {
        out.push_back(check(s, "image == PG(3,2)",
                            "image " + std::to_string(r.image_size) + " == points " + std::to_string(r.points_scanned),
                            r.zero_set_equals_image && r.image_size == 15));
        out.push_back(check(s, "pairing quadric does not vanish on the image",
                            r.pairing_vanishes_on_image ? "vanishes" : "does not vanish",
                            !r.pairing_vanishes_on_image));
        return out;
    }
    out.push_back(check(s, "zero-set == image",
                        "zero-set " + std::to_string(r.zero_set_size) + " == image " + std::to_string(r.image_size) +
                            " (" + std::to_string(r.quadric_count) + " quadrics)",
                        r.zero_set_equals_image));
    out.push_back(check(s, "pairing quadric vanishes on the image",
                        r.pairing_vanishes_on_image ? "vanishes" : "does not vanish", r.pairing_vanishes_on_image));
    std::vector<ProjPoint> img = image(n);
    std::vector<QuadForm> kernel = vanishing_quadrics(img);
    size_t contained = 0;
    auto named = paper_quadrics(n);
    for (const auto &nq : named) {
        contained += in_span(nq.form, kernel);
    }
    out.push_back(check(s, "vanishing quadrics contain the tabulated forms",
                        std::to_string(contained) + "/" + std::to_string(named.size()) + " in a space of dimension " +
                            std::to_string(kernel.size()),
                        contained == named.size()));
    if (n == 4) {
        QuadForm q0 = paper_quadric(4, "Q0");
        out.push_back(check(s, "Q0 = Q9 + Q10 is the pairing form", q0.to_string(), q0 == pairing_quadric(4)));
    }
    return out;
}

std::vector<Check> suite_tables(size_t n) {
    const std::string s = "tables";
    std::vector<Check> out;
    const OrbitPartition &data = orbit_data(n);
    static const std::map<size_t, size_t> kOrbitCounts = {{2, 2}, {3, 5}, {4, 29}};
    out.push_back(check(s, "orbit count",
                        std::to_string(data.records().size()) + " == " + std::to_string(kOrbitCounts.at(n)),
                        data.records().size() == kOrbitCounts.at(n)));
    std::vector<size_t> image_sizes;
    size_t image_total = 0;
    for (const auto &rec : classify_image(n)) {
        image_sizes.push_back(rec.size);
        image_total += rec.size;
    }
    std::vector<size_t> expected;
    for (const auto &row : known_image_orbits(n)) {
        expected.push_back(row.size);
    }
    std::vector<size_t> a = image_sizes;
    std::vector<size_t> b = expected;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.push_back(check(s, "image orbit sizes", sizes_string(image_sizes) + " total " + std::to_string(image_total),
                        a == b && image_total == image_table(n).sorted_points().size()));
    for (const auto &row : known_image_orbits(n)) {
        ProjPoint rep = row.representative(n);
        const OrbitRecord &rec = data.record_of(rep);
        std::string obs = to_observable(rep).label();
        int tr = t_rank(rep);
        int er = e_rank(rep);
        bool ok = rec.size == row.size && obs == row.observable && tr == row.t_rank && er == row.e_rank;
        out.push_back(check(s, row.label + " " + rep.to_string(),
                            "size " + std::to_string(rec.size) + ", " + obs + ", " + std::to_string(tr) + "/" +
                                std::to_string(er) + " vs " + std::to_string(row.size) + ", " + row.observable + ", " +
                                std::to_string(row.t_rank) + "/" + std::to_string(row.e_rank),
                            ok));
        std::vector<PauliPoint> ops;
        for (const auto &label : row.commuting_set) {
            ops.push_back(PauliPoint::parse(label));
        }
        ProjPoint image_of_set = project(embed(generator_from_operators(ops)));
        out.push_back(check(s, row.label + " commuting set <" + join(row.commuting_set, ",") + ">",
                            "maps to " + image_of_set.to_string() + " in orbit " +
                                std::to_string(data.orbit_id(image_of_set)),
                            data.orbit_id(image_of_set) == rec.orbit_id));
    }
    return out;
}

std::vector<Check> suite_cayley(size_t n) {
    const std::string s = "cayley";
    std::vector<Check> out;
    QuadForm q = cayley_quadric(n);
    std::vector<ProjPoint> img = image(n);
    auto vanishes_on_image = [&](const QuadForm &f) {
        return std::none_of(img.begin(), img.end(), [&](const ProjPoint &p) { return f.eval(p); });
    };
    std::vector<QuadForm> orbit = quadric_orbit(q, n);
    size_t vanishing = std::count_if(orbit.begin(), orbit.end(), vanishes_on_image);
    if (n == 3) {
        out.push_back(check(s, "Cayley quadric == pairing quadric", q.to_string(), q == paper_quadric(3, "Q")));
        out.push_back(check(s, "orbit vanishes on the image",
                            std::to_string(vanishing) + "/" + std::to_string(orbit.size()) + " forms",
                            vanishing == orbit.size()));
        return out;
    }
    auto named = paper_quadrics(4);
    auto lookup = [&](const std::string &name) { return paper_quadric(4, name); };
    out.push_back(check(s, "Cayley quadric == Q8", q.to_string(), q == lookup("Q8")));

    std::vector<std::string> expected_names = {"Q0", "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8"};
    std::vector<QuadForm> expected;
    for (const auto &name : expected_names) {
        expected.push_back(lookup(name));
    }
    std::vector<std::string> present;
    std::vector<std::string> missing;
    for (size_t k = 0; k < expected.size(); k++) {
        bool found = std::find(orbit.begin(), orbit.end(), expected[k]) != orbit.end();
        (found ? present : missing).push_back(expected_names[k]);
    }
    size_t extra = 0;
    for (const auto &f : orbit) {
        extra += std::find(expected.begin(), expected.end(), f) == expected.end();
    }
    out.push_back(check(s, "orbit(Q8) == {Q0..Q8}",
                        std::to_string(orbit.size()) + " forms; present " + join(present, ",") + "; missing " +
                            (missing.empty() ? "none" : join(missing, ",")) + "; " + std::to_string(extra) +
                            " others",
                        missing.empty() && extra == 0));
    bool has_q9 = std::find(orbit.begin(), orbit.end(), lookup("Q9")) != orbit.end();
    bool has_q10 = std::find(orbit.begin(), orbit.end(), lookup("Q10")) != orbit.end();
    out.push_back(check(s, "Q9 excluded", has_q9 ? "present" : "absent", !has_q9));
    out.push_back(check(s, "Q10 excluded", has_q10 ? "present" : "absent", !has_q10));
    out.push_back(check(s, "orbit vanishes on the image",
                        std::to_string(vanishing) + "/" + std::to_string(orbit.size()) + " forms",
                        vanishing == orbit.size()));
    size_t r_orbit = span_rank(orbit);
    size_t r_expected = span_rank(expected);
    std::vector<QuadForm> both = orbit;
    both.insert(both.end(), expected.begin(), expected.end());
    size_t r_both = span_rank(both);
    out.push_back(info(s, "span(orbit) vs span{Q0..Q8}",
                       "ranks " + std::to_string(r_orbit) + " and " + std::to_string(r_expected) + ", joint " +
                           std::to_string(r_both) + (r_orbit == r_both && r_expected == r_both ? " (equal)" : "")));
    out.push_back(info(s, "Q9 in span(orbit)", in_span(lookup("Q9"), orbit) ? "yes" : "no"));

    std::vector<QuadForm> orbit_named;
    for (const auto &name : {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8", "Q0"}) {
        orbit_named.push_back(lookup(name));
    }
    size_t z_orbit = zero_set(orbit_named, 4).size();
    out.push_back(info(s, "zero-set of {Q1..Q8,Q0}",
                       std::to_string(z_orbit) + " points vs image " + std::to_string(img.size())));
    std::vector<QuadForm> with_q9 = orbit_named;
    with_q9.push_back(lookup("Q9"));
    std::vector<ProjPoint> z9 = zero_set(with_q9, 4);
    out.push_back(check(s, "{Q1..Q9,Q0} cuts out the image",
                        "zero-set " + std::to_string(z9.size()) + " == image " + std::to_string(img.size()),
                        z9 == img));
    return out;
}

Report checks_report(const std::vector<Check> &checks) {
    Report r;
    r.table.header = {"suite", "check", "measured", "result"};
    ordered_json arr = ordered_json::array();
    bool all_ok = true;
    for (const auto &c : checks) {
        r.lines.push_back("[" + c.suite + "] " + c.name + ": " + c.measured + ": " + c.status);
        r.table.rows.push_back({c.suite, c.name, c.measured, c.status});
        arr.push_back({{"suite", c.suite}, {"check", c.name}, {"measured", c.measured}, {"result", c.status}});
        all_ok &= c.status != "FAIL";
    }
    r.json["checks"] = arr;
    r.json["passed"] = all_ok;
    r.exit_code = all_ok ? kExitOk : kExitVerifyFailed;
    r.table_in_text = false;
    return r;
}

}  // namespace

std::string Report::render(Format format) const {
    std::string out;
    switch (format) {
        case Format::kJson:
            return json.dump(2) + "\n";
        case Format::kCsv:
            if (table.header.empty()) {
                for (const auto &l : lines) {
                    out += l + "\n";
                }
                return out;
            }
            for (size_t k = 0; k < table.header.size(); k++) {
                out += (k ? "," : "") + csv_field(table.header[k]);
            }
            out += "\n";
            for (const auto &row : table.rows) {
                for (size_t k = 0; k < row.size(); k++) {
                    out += (k ? "," : "") + csv_field(row[k]);
                }
                out += "\n";
            }
            return out;
        case Format::kText:
            for (const auto &l : lines) {
                out += l + "\n";
            }
            if (table_in_text && !table.header.empty() && !table.rows.empty()) {
                if (!lines.empty()) {
                    out += "\n";
                }
                out += "| " + join(table.header, " | ") + " |\n|";
                for (size_t k = 0; k < table.header.size(); k++) {
                    out += "---|";
                }
                out += "\n";
                for (const auto &row : table.rows) {
                    out += "| " + join(row, " | ") + " |\n";
                }
            }
            return out;
    }
    return out;
}

Report cmd_counts(size_t n) {
    require_range(n, 2, 5, "counts");
    Report r;
    uint64_t points = (uint64_t{1} << (2 * n)) - 1;
    size_t gens = image_table(n).generators().size();
    size_t img = image_table(n).sorted_points().size();
    r.table.header = {"quantity", "value"};
    r.table.rows = {{"points", std::to_string(points)},
                    {"generators", std::to_string(gens)},
                    {"image", std::to_string(img)}};
    r.json = {{"n", n}, {"points", points}, {"generators", gens}, {"image", img}};
    if (n <= 4) {
        size_t orbits = orbit_partition(n).size();
        size_t image_orbits = classify_image(n).size();
        r.table.rows.push_back({"orbits", std::to_string(orbits)});
        r.table.rows.push_back({"image_orbits", std::to_string(image_orbits)});
        r.json["orbits"] = orbits;
        r.json["image_orbits"] = image_orbits;
    }
    for (const auto &row : r.table.rows) {
        r.lines.push_back(row[0] + " " + row[1]);
    }
    r.table_in_text = false;
    return r;
}

Report cmd_generators(size_t n) {
    require_range(n, 1, 5, "generators");
    Report r;
    std::vector<Generator> gens = n >= 2 ? image_table(n).generators() : enumerate_generators(n);
    r.lines.push_back("generators " + std::to_string(gens.size()));
    r.table.header = {"index", "basis"};
    ordered_json arr = ordered_json::array();
    for (size_t k = 0; k < gens.size(); k++) {
        auto labels = basis_labels(gens[k]);
        r.table.rows.push_back({std::to_string(k + 1), join(labels, " ")});
        arr.push_back({{"index", k + 1}, {"basis", labels}});
    }
    r.json = {{"n", n}, {"count", gens.size()}, {"generators", arr}};
    return r;
}

Report cmd_project(size_t n, const std::string &ops) {
    std::vector<PauliPoint> points = parse_ops(ops);
    size_t inferred = points.front().n_qubits();
    if (n != 0 && inferred != n) {
        throw ParseError("labels act on " + std::to_string(inferred) + " qubits but --n is " + std::to_string(n));
    }
    n = inferred;
    require_range(n, 2, 5, "project");
    Generator g = generator_from_operators(points);
    PlueckerVec v = embed(g);
    ProjPoint p = project(v);
    PauliPoint obs = to_observable(p);
    Report r;
    r.lines = {"generator " + join(basis_labels(g), " "), "point " + p.to_string(), "hex " + p.hex(),
               "observable " + obs.label()};
    r.table.header = {"x", "subset", "pluecker", "value"};
    ordered_json retained = ordered_json::array();
    const auto &order = display_order(n);
    for (size_t k = 0; k < order.size(); k++) {
        SubsetIndex subset = SubsetIndex::from_key(n, order[k]);
        SubsetIndex j = principal_index(subset);
        std::string value = p.at_key(order[k]) ? "1" : "0";
        r.table.rows.push_back({"x" + std::to_string(k + 1), subset.to_string(), "p" + j.compact(), value});
        retained.push_back({{"x", k + 1}, {"pluecker", j.compact()}, {"value", value}});
    }
    std::vector<std::string> nonzero;
    for (uint32_t key : subsets_by_key(2 * n, n)) {
        if (v.at_key(key)) {
            nonzero.push_back(SubsetIndex::from_key(2 * n, key).compact());
        }
    }
    r.json = {{"n", n},
              {"generator", basis_labels(g)},
              {"pluecker_nonzero", nonzero},
              {"retained", retained},
              {"point_bits", p.bit_string()},
              {"point_hex", p.hex()},
              {"observable", obs.label()}};
    return r;
}

Report cmd_lift(size_t n, const std::string &point) {
    require_range(n, 2, 5, "lift");
    ProjPoint p = ProjPoint::parse(n, point);
    Generator g = lift(p);
    Report r;
    r.lines.push_back("point " + p.to_string());
    r.lines.push_back("observable " + to_observable(p).label());
    ordered_json chart = nullptr;
    if (p.at_key(0)) {
        ChartMatrix a = chart_matrix(p);
        std::vector<std::string> rows;
        for (const auto &row : a.entries.row_list()) {
            rows.push_back(row.to_string());
        }
        r.lines.push_back("chart matrix " + join(rows, " "));
        chart = rows;
    } else {
        r.lines.push_back("chart matrix - (off the chart)");
    }
    auto basis = basis_labels(g);
    r.lines.push_back("generator " + join(basis, " "));
    auto members = point_labels(g);
    r.table.header = {"element", "operator"};
    for (size_t k = 0; k < members.size(); k++) {
        r.table.rows.push_back({std::to_string(k + 1), members[k]});
    }
    r.json = {{"n", n},
              {"point_bits", p.bit_string()},
              {"point_hex", p.hex()},
              {"chart_matrix", chart},
              {"generator", basis},
              {"commuting_set", members}};
    return r;
}

Report cmd_map(size_t n) {
    require_range(n, 2, 5, "map");
    const ImageTable &t = image_table(n);
    Report r;
    r.lines.push_back("generators " + std::to_string(t.generators().size()) + ", image " +
                      std::to_string(t.sorted_points().size()) + (t.injective() ? ", injective" : ", NOT injective"));
    r.table.header = {"index", "basis", "point", "hex", "observable"};
    ordered_json arr = ordered_json::array();
    for (size_t k = 0; k < t.generators().size(); k++) {
        const ProjPoint &p = t.points()[k];
        auto basis = basis_labels(t.generators()[k]);
        std::string obs = to_observable(p).label();
        r.table.rows.push_back({std::to_string(k + 1), join(basis, " "), p.bit_string(), p.hex(), obs});
        arr.push_back({{"index", k + 1},
                       {"basis", basis},
                       {"point_bits", p.bit_string()},
                       {"point_hex", p.hex()},
                       {"observable", obs}});
    }
    r.json = {{"n", n}, {"injective", t.injective()}, {"map", arr}};
    return r;
}

Report cmd_relations(size_t n) {
    require_range(n, 2, 4, "relations");
    auto rels = pluecker_relations(n);
    auto distinct = distinct_pluecker_relations(n);
    std::map<size_t, size_t> by_terms;
    for (const auto &rel : rels) {
        by_terms[rel.terms.size()]++;
    }
    Report r;
    std::vector<std::string> parts;
    for (const auto &[terms, count] : by_terms) {
        parts.push_back(std::to_string(count) + " with " + std::to_string(terms) + " terms");
    }
    r.lines.push_back("relations " + std::to_string(rels.size()) + " (" + join(parts, ", ") + "), " +
                      std::to_string(distinct.size()) + " distinct before the independence filter");
    r.table.header = {"index", "terms", "relation"};
    ordered_json arr = ordered_json::array();
    for (size_t k = 0; k < rels.size(); k++) {
        r.table.rows.push_back({std::to_string(k + 1), std::to_string(rels[k].terms.size()), rels[k].to_string()});
        arr.push_back(rels[k].to_string());
    }
    ordered_json counts = ordered_json::object();
    for (const auto &[terms, count] : by_terms) {
        counts[std::to_string(terms)] = count;
    }
    r.json = {{"n", n}, {"count", rels.size()}, {"by_terms", counts}, {"distinct", distinct.size()}, {"relations", arr}};
    return r;
}

Report cmd_constraints(size_t n) {
    require_range(n, 2, 5, "constraints");
    auto cons = lagrangian_constraints(n);
    size_t rk = rank(constraint_matrix(n));
    Report r;
    r.lines.push_back("constraints " + std::to_string(cons.size()) + ", rank " + std::to_string(rk));
    r.lines.push_back("eliminated " + std::to_string(eliminated_indices(n).size()) + ", retained " +
                      std::to_string(retained_indices(n).size()));
    r.table.header = {"index", "constraint"};
    ordered_json arr = ordered_json::array();
    for (size_t k = 0; k < cons.size(); k++) {
        r.table.rows.push_back({std::to_string(k + 1), cons[k].to_string()});
        arr.push_back(cons[k].to_string());
    }
    std::vector<std::string> retained;
    for (const auto &s : retained_indices(n)) {
        retained.push_back(s.compact());
    }
    r.json = {{"n", n}, {"count", cons.size()}, {"rank", rk}, {"retained", retained}, {"constraints", arr}};
    return r;
}

Report cmd_coords(size_t n) {
    require_range(n, 2, 5, "coords");
    Report r;
    r.table.header = {"x", "subset", "pluecker"};
    ordered_json arr = ordered_json::array();
    const auto &order = display_order(n);
    for (size_t k = 0; k < order.size(); k++) {
        SubsetIndex subset = SubsetIndex::from_key(n, order[k]);
        std::string p = "p" + principal_index(subset).compact();
        r.table.rows.push_back({"x" + std::to_string(k + 1), subset.to_string(), p});
        r.lines.push_back("x" + std::to_string(k + 1) + " = " + p);
        arr.push_back({{"x", k + 1}, {"subset", subset.to_string()}, {"pluecker", p}});
    }
    r.json = {{"n", n}, {"coordinates", arr}};
    return r;
}

Report cmd_quadrics(size_t n) {
    require_range(n, 3, 4, "quadrics");
    Report r;
    r.table.header = {"name", "form"};
    ordered_json arr = ordered_json::array();
    for (const auto &nq : paper_quadrics(n)) {
        r.table.rows.push_back({nq.name, nq.form.to_string()});
        arr.push_back({{"name", nq.name}, {"form", nq.form.to_string()}});
    }
    r.json = {{"n", n}, {"quadrics", arr}};
    return r;
}

Report cmd_orbits(size_t n) {
    require_range(n, 2, 4, "orbits");
    auto recs = orbit_partition(n);
    Report r;
    size_t total = 0;
    for (const auto &rec : recs) {
        total += rec.size;
    }
    r.lines.push_back("orbits " + std::to_string(recs.size()) + ", points " + std::to_string(total) +
                      ", group order " + std::to_string(group_order(n)));
    r.table.header = {"orbit", "label", "size", "representative", "hex", "t_rank", "e_rank", "observable", "in_image"};
    ordered_json arr = ordered_json::array();
    for (const auto &rec : recs) {
        r.table.rows.push_back({std::to_string(rec.orbit_id), rec.known_label.value_or("-"), std::to_string(rec.size),
                                rec.representative.to_string(), rec.representative.hex(), std::to_string(rec.t_rank),
                                opt_int(rec.e_rank), rec.observable.value_or("-"), rec.in_image ? "yes" : "no"});
        ordered_json j = {{"orbit_id", rec.orbit_id}};
        if (rec.known_label) {
            j["paper_orbit_label"] = *rec.known_label;
        }
        j["size"] = rec.size;
        j["representative_bits"] = rec.representative.bit_string();
        j["representative_hex"] = rec.representative.hex();
        if (rec.observable) {
            j["observable"] = *rec.observable;
        }
        j["t_rank"] = rec.t_rank;
        if (rec.e_rank) {
            j["e_rank"] = *rec.e_rank;
        }
        j["in_image"] = rec.in_image;
        arr.push_back(j);
    }
    r.json = {{"n", n}, {"orbits", arr}};
    return r;
}

Report cmd_tables(size_t n) {
    require_range(n, 2, 4, "tables");
    auto rows = emit_tables(n);
    Report r;
    r.lines.push_back("image orbits " + std::to_string(rows.size()));
    r.table.header = {"orbit", "label", "size", "representative", "canonical", "observable", "T/E", "commuting set"};
    ordered_json arr = ordered_json::array();
    for (const auto &row : rows) {
        const OrbitRecord &rec = row.record;
        r.table.rows.push_back({std::to_string(rec.orbit_id), rec.known_label.value_or("-"), std::to_string(rec.size),
                                row.shown_representative.to_string(), rec.representative.to_string(), row.observable,
                                std::to_string(rec.t_rank) + "/" + opt_int(rec.e_rank),
                                "<" + join(row.commuting_basis, ",") + ">"});
        ordered_json j = {{"orbit_id", rec.orbit_id}};
        if (rec.known_label) {
            j["paper_orbit_label"] = *rec.known_label;
        }
        j["size"] = rec.size;
        j["representative_bits"] = row.shown_representative.bit_string();
        j["canonical_representative_bits"] = rec.representative.bit_string();
        j["observable"] = row.observable;
        j["t_rank"] = rec.t_rank;
        if (rec.e_rank) {
            j["e_rank"] = *rec.e_rank;
        }
        j["commuting_basis"] = row.commuting_basis;
        j["sample_commuting_set"] = row.commuting_set;
        arr.push_back(j);
    }
    r.json = {{"n", n}, {"rows", arr}};
    return r;
}

Report cmd_rank(size_t n, const std::string &point) {
    require_range(n, 2, 4, "rank");
    ProjPoint p = ProjPoint::parse(n, point);
    const OrbitRecord &rec = orbit_data(n).record_of(p);
    bool in_img = image_table(n).contains(p);
    std::optional<int> er;
    if (in_img) {
        er = e_rank(p);
    }
    Report r;
    r.lines = {"point " + p.to_string(),
               "orbit " + std::to_string(rec.orbit_id) + (rec.known_label ? " (" + *rec.known_label + ")" : "") +
                   ", size " + std::to_string(rec.size),
               "t_rank " + std::to_string(t_rank(p)),
               "separable " + std::string(is_separable(p) ? "yes" : "no"),
               "e_rank " + (er ? std::to_string(*er) : std::string("undefined (not in the image)"))};
    r.table.header = {"quantity", "value"};
    r.table.rows = {{"orbit", std::to_string(rec.orbit_id)},
                    {"orbit_size", std::to_string(rec.size)},
                    {"t_rank", std::to_string(t_rank(p))},
                    {"separable", is_separable(p) ? "yes" : "no"},
                    {"e_rank", opt_int(er)}};
    r.table_in_text = false;
    r.json = {{"n", n},
              {"point_bits", p.bit_string()},
              {"orbit_id", rec.orbit_id},
              {"orbit_size", rec.size},
              {"t_rank", t_rank(p)},
              {"separable", is_separable(p)},
              {"in_image", in_img}};
    if (er) {
        r.json["e_rank"] = *er;
    }
    return r;
}

Report cmd_verify(size_t n, const std::string &suite) {
    static const std::vector<std::string> kSuites = {"bijection", "variety", "tables", "cayley"};
    if (suite != "all" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
        throw ParseError("unknown suite '" + suite + "'");
    }
    std::vector<Check> checks;
    auto want = [&](const std::string &name) { return suite == "all" || suite == name; };
    if (want("bijection")) {
        require_range(n, 2, 5, "verify bijection");
        auto c = suite_bijection(n);
        checks.insert(checks.end(), c.begin(), c.end());
    }
    if (want("variety")) {
        require_range(n, 2, 5, "verify variety");
        auto c = suite_variety(n);
        checks.insert(checks.end(), c.begin(), c.end());
    }
    if (want("tables") && (suite != "all" || n <= 4)) {
        require_range(n, 2, 4, "verify tables");
        auto c = suite_tables(n);
        checks.insert(checks.end(), c.begin(), c.end());
    }
    if (want("cayley") && (suite != "all" || n == 3 || n == 4)) {
        require_range(n, 3, 4, "verify cayley");
        auto c = suite_cayley(n);
        checks.insert(checks.end(), c.begin(), c.end());
    }
    Report r = checks_report(checks);
    r.json["n"] = n;
    r.json["suite"] = suite;
    return r;
}

Report cmd_cayley(size_t n) {
    require_range(n, 3, 4, "cayley");
    QuadForm q = cayley_quadric(n);
    auto orbit = quadric_orbit(q, n);
    auto named = paper_quadrics(n);
    auto name_of = [&](const QuadForm &f) -> std::string {
        for (const auto &nq : named) {
            if (nq.form == f) {
                return nq.name;
            }
        }
        return "-";
    };
    Report r;
    r.lines.push_back("cayley quadric " + q.to_string() + " (" + name_of(q) + ")");
    r.lines.push_back("orbit size " + std::to_string(orbit.size()) + ", span rank " + std::to_string(span_rank(orbit)));
    r.table.header = {"index", "name", "form"};
    ordered_json arr = ordered_json::array();
    for (size_t k = 0; k < orbit.size(); k++) {
        r.table.rows.push_back({std::to_string(k + 1), name_of(orbit[k]), orbit[k].to_string()});
        ordered_json j = {{"form", orbit[k].to_string()}};
        if (name_of(orbit[k]) != "-") {
            j["name"] = name_of(orbit[k]);
        }
        arr.push_back(j);
    }
    r.json = {{"n", n}, {"cayley", q.to_string()}, {"orbit", arr}, {"span_rank", span_rank(orbit)}};
    return r;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Maximal commuting Pauli sets through the Lagrangian Grassmannian over GF(2)", "lgrpauli"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    size_t threads = 0;
    std::string out_path;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    size_t n = 0;
    std::string ops;
    std::string point;
    std::string suite = "all";
    auto add_n = [&](CLI::App *sub, bool required = true) {
        auto *opt = sub->add_option("--n", n, "Number of qubits N");
        if (required) {
            opt->required();
        }
    };

    std::map<std::string, std::function<Report()>> dispatch;
    auto simple = [&](const std::string &name, const std::string &help, Report (*fn)(size_t)) {
        CLI::App *sub = app.add_subcommand(name, help);
        add_n(sub);
        dispatch[name] = [&n, fn] { return fn(n); };
    };
    simple("counts", "Point, generator, image and orbit counts", cmd_counts);
    simple("generators", "Enumerate all generators (maximal commuting sets)", cmd_generators);
    simple("map", "Every generator with its image point and observable", cmd_map);
    simple("relations", "Quadratic Plücker relations", cmd_relations);
    simple("constraints", "Linear constraints cutting out the Lagrangian Grassmannian", cmd_constraints);
    simple("coords", "Principal-minor coordinates in display order", cmd_coords);
    simple("quadrics", "Tabulated quadrics of the image", cmd_quadrics);
    simple("orbits", "All G-orbits of PG(2^N-1,2)", cmd_orbits);
    simple("tables", "Classification table of the image orbits", cmd_tables);
    simple("cayley", "Cayley quadric and its G-orbit", cmd_cayley);

    CLI::App *project = app.add_subcommand("project", "Map a maximal commuting set to its point and observable");
    add_n(project, false);
    project->add_option("--ops", ops, "Comma-separated Pauli labels")->required();
    dispatch["project"] = [&] { return cmd_project(n, ops); };

    CLI::App *lift_cmd = app.add_subcommand("lift", "Recover the generator mapping to a point");
    add_n(lift_cmd);
    lift_cmd->add_option("--point", point, "Point as bits, [a:b:...] or 0x hex")->required();
    dispatch["lift"] = [&] { return cmd_lift(n, point); };

    CLI::App *rank_cmd = app.add_subcommand("rank", "T-rank, E-rank and orbit of a point");
    add_n(rank_cmd);
    rank_cmd->add_option("--point", point, "Point as bits, [a:b:...] or 0x hex")->required();
    dispatch["rank"] = [&] { return cmd_rank(n, point); };

    CLI::App *verify = app.add_subcommand("verify", "Run verification suites");
    add_n(verify);
    verify->add_option("--suite", suite, "bijection, variety, tables, cayley or all")
        ->check(CLI::IsMember({"all", "bijection", "variety", "tables", "cayley"}))
        ->capture_default_str();
    dispatch["verify"] = [&] { return cmd_verify(n, suite); };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    Format format = format_name == "json" ? Format::kJson : format_name == "csv" ? Format::kCsv : Format::kText;
    set_worker_count(threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads);

    Report report;
    try {
        report = dispatch.at(app.get_subcommands().front()->get_name())();
    } catch (const NonCommutingError &e) {
        err << "error: " << e.what() << "\n";
        return kExitNonCommuting;
    } catch (const NotMaximalError &e) {
        err << "error: not maximal: " << e.what() << "\n";
        return kExitNotMaximal;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotInImageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const RangeError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }

    std::string text = report.render(format);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot write " << out_path << "\n";
            return kExitInternal;
        }
        file << text;
    }
    return report.exit_code;
}

}  // namespace lgrpauli::cli
