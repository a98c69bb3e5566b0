#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcrep/rational.hpp"
#include "hcrep/rootsys/root_system.hpp"

namespace hcrep::uea {

using rootsys::LatticeVector;
using rootsys::Root;
using rootsys::RootSystem;
using rootsys::Weight;

/// Sparse vector over the basis: (index, coefficient) pairs sorted by index,
/// coefficients nonzero.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

enum class BasisKind { negative, cartan, positive };

/// Structure constants of a semisimple Lie algebra in a basis adapted to a
/// root system. Basis order: root vectors X_gamma for negative gamma (in root
/// enumeration order), then the simple coroots H_1..H_n, then X_gamma for
/// positive gamma. Labels are F(root), H(letter), E(root) with F(root) the
/// vector of weight -root. Immutable after construction.
class StructureConstants {
public:
    /// brackets maps (i, j) to [b_i, b_j]; a missing (j, i) is filled in by
    /// antisymmetry. Throws InvalidInput naming the violated invariant:
    /// antisymmetry, commuting Cartan, grading, or the Jacobi identity.
    StructureConstants(RootSystem rs, const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& brackets,
                       std::string description);

    /// sl_n through matrix units; E_ij (i < j) is the root vector of
    /// alpha_i + ... + alpha_{j-1}.
    static StructureConstants builtin_sl(std::size_t n);
    /// {"cartan": matrix or type string, "brackets": [[i, j, k, "p/q"], ...]};
    /// i, j, k are basis indices or labels.
    static StructureConstants parse_json(const std::string& text);
    /// "sl<n>", or "@path" / path to a JSON file.
    static StructureConstants load(const std::string& source);
    std::string to_json_text() const;

    const RootSystem& rs() const { return rs_; }
    std::size_t dim() const { return kinds_.size(); }
    std::size_t rank() const { return rs_.rank(); }
    const std::string& description() const { return description_; }

    BasisKind kind(std::size_t i) const { return kinds_[i]; }
    bool is_cartan(std::size_t i) const { return kinds_[i] == BasisKind::cartan; }
    /// ad(h)-weight of b_i (zero for Cartan elements).
    const LatticeVector& weight(std::size_t i) const { return weights_[i]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    std::optional<std::size_t> find_label(const std::string& label) const;
    std::size_t cartan_index(std::size_t i) const { return negatives_ + i; }
    /// Basis index of X_gamma. Throws InvalidInput if gamma is not a root.
    std::size_t root_vector(const Root& gamma) const;

    const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    SparseVector bracket(const SparseVector& u, const SparseVector& v) const;

private:
    void validate() const;

    RootSystem rs_;
    std::string description_;
    std::size_t negatives_ = 0;
    std::vector<BasisKind> kinds_;
    std::vector<LatticeVector> weights_;
    std::vector<std::string> labels_;
    std::vector<SparseVector> table_;
};

/// Letter naming simple root i ("a", "b", ...).
std::string simple_letter(const RootSystem& rs, std::size_t i);

}  // namespace hcrep::uea
