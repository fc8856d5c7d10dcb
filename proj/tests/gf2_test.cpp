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

#include "lgrpauli/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace lgrpauli;

namespace {

BinMat random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols) {
    BinMat m(rows, cols);
    for (size_t i = 1; i <= rows; i++) {
        for (size_t j = 1; j <= cols; j++) {
            m.set(i, j, rng() & 1);
        }
    }
    return m;
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

}  // namespace

TEST(BinVec, basic_access) {
    BinVec v = BinVec::from_string("0110");
    EXPECT_EQ(v.size(), 4u);
    EXPECT_FALSE(v.get(1));
    EXPECT_TRUE(v.get(2));
    EXPECT_EQ(v.weight(), 2u);
    EXPECT_EQ(v.to_string(), "0110");
    EXPECT_EQ(v.to_word(), 0b0110u);
    v.flip(1);
    EXPECT_EQ(v.to_string(), "1110");
    EXPECT_THROW(v.get(0), std::out_of_range);
    EXPECT_THROW(v.get(5), std::out_of_range);
    EXPECT_THROW(BinVec::from_string("01a"), std::invalid_argument);
}

TEST(BinVec, xor_and_dot) {
    BinVec a = BinVec::from_string("1100");
    BinVec b = BinVec::from_string("1010");
    EXPECT_EQ((a ^ b).to_string(), "0110");
    EXPECT_TRUE(a.dot(b));
    EXPECT_FALSE(a.dot(a));
}

TEST(BinVec, long_vectors_cross_words) {
    BinVec v(130);
    v.set(1, true);
    v.set(64, true);
    v.set(65, true);
    v.set(130, true);
    EXPECT_EQ(v.weight(), 4u);
    BinVec w = BinVec::unit(130, 65);
    EXPECT_EQ((v ^ w).weight(), 3u);
    EXPECT_THROW(v.to_word(), std::logic_error);
}

TEST(BinVec, lexicographic_order) {
    EXPECT_LT(BinVec::from_string("0111"), BinVec::from_string("1000"));
    EXPECT_LT(BinVec::from_string("0010"), BinVec::from_string("0100"));
    EXPECT_LT(BinVec::from_string("111"), BinVec::from_string("0000"));
}

TEST(BinMat, rank_of_worked_matrix) {
    // The three commuting operators ZZI, XXI, IIX written as rows.
    BinMat m = BinMat::from_strings({"110000", "000110", "000001"});
    EXPECT_EQ(rank(m), 3u);
}

TEST(BinMat, kernel_of_all_ones_row) {
    BinMat m = BinMat::from_strings({"1111"});
    BinMat k = kernel(m);
    EXPECT_EQ(k.rows(), 3u);
    for (const auto &v : k.row_list()) {
        EXPECT_FALSE(v.dot(m.row(1)));
    }
    EXPECT_EQ(rank(k), 3u);
}

TEST(BinMat, rank_nullity_random) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
        BinMat m = random_matrix(rng, r, c);
        BinMat k = kernel(m);
        EXPECT_EQ(rank(m) + k.rows(), c);
        for (const auto &v : k.row_list()) {
            for (const auto &row : m.row_list()) {
                EXPECT_FALSE(row.dot(v));
            }
        }
    }
}

TEST(BinMat, rref_is_canonical) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; trial++) {
        BinMat m = random_matrix(rng, 4, 7);
        BinMat r = rref(m);
        EXPECT_EQ(rref(r), r);
        EXPECT_EQ(r.rows(), rank(m));
        // Same row space: stacking adds nothing.
        std::vector<BinVec> rows = m.row_list();
        for (const auto &v : r.row_list()) {
            rows.push_back(v);
        }
        EXPECT_EQ(rank(BinMat::from_rows(rows, 7)), rank(m));
    }
    EXPECT_EQ(rref(BinMat::from_strings({"11", "00"}), ZeroRows::kKeep).rows(), 2u);
}

TEST(BinMat, det_matches_leibniz) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng() % 6;
        BinMat m = random_matrix(rng, n, n);
        EXPECT_EQ(int(det(m)), oracle::leibniz_det(dense(m)));
    }
    EXPECT_THROW(det(BinMat(2, 3)), std::invalid_argument);
}

TEST(BinMat, det_packed_matches_det) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 8;
        BinMat m = random_matrix(rng, n, n);
        std::vector<uint64_t> rows;
        for (const auto &r : m.row_list()) {
            rows.push_back(r.to_word());
        }
        EXPECT_EQ(det_packed(rows, n), det(m));
    }
}

TEST(BinMat, minors) {
    BinMat m = BinMat::from_strings({"10", "01"});
    std::vector<size_t> one = {1}, two = {2}, both = {1, 2}, none = {};
    EXPECT_TRUE(minor(m, both, both));
    EXPECT_FALSE(minor(m, one, two));
    EXPECT_TRUE(minor(m, none, none));
    EXPECT_THROW(minor(m, one, both), std::invalid_argument);
    std::vector<size_t> bad = {3};
    EXPECT_THROW(minor(m, bad, one), std::out_of_range);
}

TEST(BinMat, product_and_transpose) {
    BinMat a = BinMat::from_strings({"110", "011"});
    BinMat b = a.transpose();
    EXPECT_EQ(b.rows(), 3u);
    EXPECT_EQ((a * b).to_string(), BinMat::from_strings({"01", "10"}).to_string());
    EXPECT_EQ(BinMat::identity(3) * b, b);
}
