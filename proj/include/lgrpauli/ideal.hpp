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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgrpauli/gf2.hpp"
#include "lgrpauli/pluecker.hpp"
#include "lgrpauli/projection.hpp"

namespace lgrpauli {

/// A homogeneous quadratic form over GF(2) in the 2^N coordinates of a
/// ProjPoint. Variables are internal subset keys; text uses display
/// numbering (x_1 ... x_{2^N}). A monomial (a, a) is the square x_a^2.
class QuadForm {
   public:
    using Monomial = std::pair<uint32_t, uint32_t>;

    /// The zero form. 2 <= N <= 5.
    explicit QuadForm(size_t n_qubits);
    /// Monomials x_i x_j given by 1-based display positions.
    static QuadForm from_display_pairs(size_t n_qubits, std::span<const std::pair<size_t, size_t>> pairs);
    /// Monomials p_S p_T over principal-minor Plücker coordinates.
    static QuadForm from_pluecker_pairs(size_t n_qubits, std::span<const std::pair<SubsetIndex, SubsetIndex>> pairs);

    size_t n_qubits() const { return n_qubits_; }
    size_t n_vars() const { return size_t{1} << n_qubits_; }
    /// Sorted, first <= second.
    const std::vector<Monomial> &monomials() const { return monomials_; }
    size_t size() const { return monomials_.size(); }
    bool is_zero() const { return monomials_.empty(); }

    /// Adds x_a x_b (removes it if already present).
    void toggle(uint32_t a, uint32_t b);
    QuadForm &operator+=(const QuadForm &other);
    friend QuadForm operator+(QuadForm a, const QuadForm &b) { return a += b; }

    /// Value at a point, with x^2 = x. Throws on dimension mismatch.
    bool eval(const ProjPoint &p) const;
    bool eval_packed(uint64_t encoding) const;

    /// "x1*x13 + x2*x14", display numbering, ascending pairs; "0" if empty.
    std::string to_string() const;

    bool operator==(const QuadForm &other) const = default;
    auto operator<=>(const QuadForm &other) const = default;

   private:
    size_t n_qubits_;
    std::vector<Monomial> monomials_;
};

struct NamedQuadForm {
    std::string name;
    QuadForm form;
};

/// N = 3: the single pairing quadric "Q". N = 4: Q1 ... Q10 and Q0 = Q9 +
/// Q10. Throws RangeError otherwise.
std::vector<NamedQuadForm> paper_quadrics(size_t n_qubits);
/// Look up one of paper_quadrics by name.
QuadForm paper_quadric(size_t n_qubits, const std::string &name);

/// sum of x_I x_{I^c} over unordered complementary pairs.
QuadForm pairing_quadric(size_t n_qubits);

/// Common zeros among all 2^(2^N) - 1 points, ascending encoding.
std::vector<ProjPoint> zero_set(std::span<const QuadForm> forms, size_t n_qubits);

struct VarietyReport {
    size_t n_qubits = 0;
    size_t quadric_count = 0;
    uint64_t points_scanned = 0;
    size_t zero_set_size = 0;
    size_t image_size = 0;
    /// Zero set of paper_quadrics equals the image (for N = 2: the image is
    /// the whole space).
    bool zero_set_equals_image = false;
    /// The pairing quadric vanishes on the whole image.
    bool pairing_vanishes_on_image = false;
    bool passed() const { return zero_set_equals_image; }
};

/// 2 <= N <= 4.
VarietyReport verify_variety(size_t n_qubits);

/// Basis of the quadrics (squares included) vanishing on every point.
std::vector<QuadForm> vanishing_quadrics(std::span<const ProjPoint> points);

/// GF(2) rank of a list of forms.
size_t span_rank(std::span<const QuadForm> forms);
bool in_span(const QuadForm &q, std::span<const QuadForm> basis);

/// The four-monomial form
///   p_{123T} p_{1'2'3'T} + p_{123'T} p_{31'2'T} + p_{132'T} p_{21'3'T}
///   + p_{12'3'T} p_{231'T},  k' = N + k,  T = {(N+4)..(2N)}.
/// N in {3, 4}.
QuadForm cayley_quadric(size_t n_qubits);

/// q(M x) for the linear map M (formal substitution, squares kept).
QuadForm substitute(const QuadForm &q, const BinMat &m);

/// Closure of {q} under substitution by the group generators, sorted.
/// N in {3, 4}.
std::vector<QuadForm> quadric_orbit(const QuadForm &q, size_t n_qubits);

}  // namespace lgrpauli
