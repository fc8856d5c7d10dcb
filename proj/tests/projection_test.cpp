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

#include "lgrpauli/projection.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lgrpauli/errors.hpp"
#include "oracles.hpp"

using namespace lgrpauli;

namespace {

std::vector<std::string> x_list(size_t n) {
    std::vector<std::string> out;
    for (uint32_t key : display_order(n)) {
        out.push_back(principal_index(SubsetIndex::from_key(n, key)).compact());
    }
    return out;
}

Generator from_labels(std::initializer_list<const char *> labels) {
    std::vector<PauliPoint> ops;
    for (const char *l : labels) {
        ops.push_back(PauliPoint::parse(l));
    }
    return generator_from_operators(ops);
}

}  // namespace

TEST(DisplayOrder, coordinate_lists) {
    EXPECT_EQ(x_list(2), (std::vector<std::string>{"12", "14", "34", "23"}));
    EXPECT_EQ(x_list(3), (std::vector<std::string>{"123", "126", "135", "156", "456", "345", "246", "234"}));
    EXPECT_EQ(x_list(4), (std::vector<std::string>{"1234", "1238", "1247", "1278", "1346", "1368", "1467", "1678",
                                                   "5678", "4567", "3568", "3456", "2578", "2457", "2358", "2345"}));
}

TEST(DisplayOrder, second_half_complements_first) {
    for (size_t n = 1; n <= 5; n++) {
        const auto &order = display_order(n);
        size_t half = order.size() / 2;
        uint32_t full = (uint32_t{1} << n) - 1;
        for (size_t k = 0; k < half; k++) {
            EXPECT_EQ(order[k + half], full ^ order[k]);
            EXPECT_FALSE(order[k] & 1);
        }
    }
}

TEST(ProjPoint, parse_forms_agree) {
    ProjPoint a = ProjPoint::parse(2, "1010");
    EXPECT_EQ(ProjPoint::parse(2, "[1:0:1:0]"), a);
    EXPECT_EQ(ProjPoint::parse(2, "0xa"), a);
    EXPECT_EQ(ProjPoint::parse(2, "0xA"), a);
    EXPECT_EQ(a.to_string(), "[1:0:1:0]");
    EXPECT_EQ(a.bit_string(), "1010");
    EXPECT_EQ(a.hex(), "0xa");
    EXPECT_TRUE(a.at_display(1));
    EXPECT_FALSE(a.at_display(2));
    EXPECT_TRUE(a.at(SubsetIndex(2, {1, 2})));
    EXPECT_EQ(ProjPoint::parse(4, "0x0001").hex(), "0x0001");
}

TEST(ProjPoint, hex_round_trip) {
    for (size_t n = 1; n <= 4; n++) {
        for (uint64_t e = 1; e < (uint64_t{1} << (size_t{1} << n)); e += 1 + e / 7) {
            ProjPoint p(n, e);
            EXPECT_EQ(ProjPoint::parse(n, p.hex()), p);
            EXPECT_EQ(ProjPoint::parse(n, p.to_string()), p);
            EXPECT_EQ(ProjPoint::from_display_bits(n, p.display_bits()), p);
        }
    }
}

TEST(ProjPoint, parse_errors) {
    EXPECT_THROW(ProjPoint::parse(2, "0000"), ParseError);
    EXPECT_THROW(ProjPoint::parse(2, "101"), ParseError);
    EXPECT_THROW(ProjPoint::parse(2, "10a0"), ParseError);
    EXPECT_THROW(ProjPoint::parse(2, "[1:0:1:0"), ParseError);
    EXPECT_THROW(ProjPoint::parse(2, "0x1f"), ParseError);
    EXPECT_THROW(ProjPoint::parse(2, "0xg"), ParseError);
    EXPECT_THROW(ProjPoint::parse(2, "0x"), ParseError);
    EXPECT_THROW(ProjPoint(2, 0), std::invalid_argument);
    EXPECT_THROW(ProjPoint(2, 0x10), std::invalid_argument);
    EXPECT_THROW(ProjPoint(6, 1), RangeError);
}

TEST(Project, two_qubit_examples) {
    Generator g = from_labels({"ZX", "XZ"});
    ProjPoint p = project(embed(g));
    EXPECT_EQ(p.to_string(), "[1:0:1:0]");
    EXPECT_EQ(to_observable(p).label(), "YI");
    EXPECT_EQ(lift(p), g);
    EXPECT_EQ(project(embed(from_labels({"XI", "IX"}))).to_string(), "[0:0:1:0]");
    EXPECT_EQ(project(embed(from_labels({"ZI", "IZ"}))).to_string(), "[1:0:0:0]");
    EXPECT_EQ(to_observable(ProjPoint::parse(2, "1111")).label(), "YY");
}

TEST(Project, matches_principal_minor_oracle) {
    for (size_t n = 2; n <= 3; n++) {
        for (const auto &g : enumerate_generators(n)) {
            const BinMat &b = g.basis();
            oracle::Matrix rows(b.rows(), std::vector<int>(b.cols()));
            for (size_t i = 1; i <= b.rows(); i++) {
                for (size_t j = 1; j <= b.cols(); j++) {
                    rows[i - 1][j - 1] = b.get(i, j);
                }
            }
            auto expect = oracle::brute_projection(rows);
            ProjPoint p = project(embed(g));
            for (uint32_t key = 0; key < expect.size(); key++) {
                EXPECT_EQ(int(p.at_key(key)), expect[key]);
            }
        }
    }
}

TEST(Project, rejects_non_lagrangian_vectors) {
    // Span of Z1 and X1 (N=2): p13 = 1 but p24 = 0.
    BinVec w = wedge_packed(std::vector<uint64_t>{0b0001, 0b0100}, 2);
    EXPECT_THROW(project(PlueckerVec(2, w)), NotInImageError);
}

TEST(Image, bijective_and_lift_round_trips) {
    const size_t expect[] = {0, 0, 15, 135, 2295};
    for (size_t n = 2; n <= 4; n++) {
        const ImageTable &t = image_table(n);
        EXPECT_TRUE(t.injective());
        EXPECT_EQ(t.sorted_points().size(), expect[n]);
        std::set<ProjPoint> distinct(t.points().begin(), t.points().end());
        EXPECT_EQ(distinct.size(), expect[n]);
        for (size_t k = 0; k < t.generators().size(); k++) {
            EXPECT_EQ(lift(t.points()[k]), t.generators()[k]);
            EXPECT_EQ(t.find(t.points()[k]), k);
        }
    }
    EXPECT_EQ(image(2).size(), 15u);
}

TEST(Image, lift_rejects_points_outside) {
    std::vector<ProjPoint> outside;
    for (uint64_t e = 1; e < 256; e++) {
        ProjPoint p(3, e);
        if (!image_table(3).contains(p)) {
            outside.push_back(p);
        }
    }
    EXPECT_EQ(outside.size(), 255u - 135u);
    for (const auto &p : outside) {
        EXPECT_THROW(lift(p), NotInImageError);
    }
}

TEST(Chart, matrix_reproduces_minors) {
    for (size_t n = 2; n <= 4; n++) {
        for (const auto &p : image_table(n).points()) {
            if (!p.at_key(0)) {
                EXPECT_THROW(chart_matrix(p), NotInImageError);
                continue;
            }
            ChartMatrix a = chart_matrix(p);
            for (uint32_t key = 0; key < (uint32_t{1} << n); key++) {
                EXPECT_EQ(a.principal_minor(key), p.at_key(key));
            }
            EXPECT_EQ(project(embed(chart_generator(a))), p);
        }
    }
}

TEST(Chart, rejects_bad_matrices) {
    EXPECT_THROW(ChartMatrix(BinMat::from_strings({"01", "00"})), std::invalid_argument);
    EXPECT_THROW(ChartMatrix(BinMat(2, 3)), std::invalid_argument);
}

TEST(Image, observables_have_even_y_count) {
    for (size_t n = 3; n <= 4; n++) {
        for (const auto &p : image_table(n).points()) {
            std::string l = to_observable(p).label();
            EXPECT_EQ(std::count(l.begin(), l.end(), 'Y') % 2, 0) << l;
        }
    }
}
