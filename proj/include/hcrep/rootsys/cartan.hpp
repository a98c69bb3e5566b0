#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hcrep::rootsys {

/// Cartan matrix of a finite crystallographic root system.
///
/// Convention: a_ij = alpha_j(H_{alpha_i}) = 2<alpha_i, alpha_j>/<alpha_i, alpha_i>,
/// so row i holds the values of the simple roots on the i-th simple coroot.
/// The symmetrized form is <alpha_i, alpha_j> = d_i * a_ij where (d_i) is the
/// minimal positive integral symmetrizer of each Dynkin component.
class CartanMatrix {
public:
    /// Validates and stores. Throws InvalidInput with a diagnostic when the
    /// matrix is malformed, not symmetrizable, or not of finite type.
    explicit CartanMatrix(std::vector<std::vector<int>> entries);

    /// Classical and exceptional types, Bourbaki numbering: A_n (n>=1),
    /// B_n (n>=2), C_n (n>=2), D_n (n>=3), E_6..E_8, F_4, G_2.
    static CartanMatrix of_type(char type, int rank);

    /// "A2", "C2", "A1xA1", "A2xB3" ...
    static CartanMatrix parse(std::string_view spec);

    static CartanMatrix block_diagonal(const CartanMatrix& a, const CartanMatrix& b);

    std::size_t rank() const { return entries_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    const std::vector<int>& symmetrizer() const { return symmetrizer_; }

    /// Connected components of the Dynkin diagram, each sorted, ordered by
    /// smallest node.
    const std::vector<std::vector<std::size_t>>& components() const { return components_; }
    std::size_t component_of_node(std::size_t i) const { return node_component_[i]; }

    bool operator==(const CartanMatrix& other) const { return entries_ == other.entries_; }

private:
    std::vector<std::vector<int>> entries_;
    std::vector<int> symmetrizer_;
    std::vector<std::vector<std::size_t>> components_;
    std::vector<std::size_t> node_component_;
};

}  // namespace hcrep::rootsys
