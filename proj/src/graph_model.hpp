#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rng.hpp"

namespace netctrl {

/// Dense weighted network of N vertices.
///
/// Convention: weights(i, j) multiplies the state of vertex j in the update
/// of vertex i, i.e. row = target of the arc. Undirected networks hold an
/// exactly symmetric matrix.
struct WeightedNetwork {
  Eigen::MatrixXd weights;
  bool directed = true;

  int order() const { return static_cast<int>(weights.rows()); }
};

/// Validates the invariants (square, order >= 1, finite entries, exact
/// symmetry when undirected) and returns the network.
WeightedNetwork make_network(Eigen::MatrixXd weights, bool directed);

/// Follower/leader split of a network together with the induced blocks.
/// Followers are kept in ascending index order, leaders in caller order.
struct LeaderPartition {
  std::vector<int> followers;
  std::vector<int> leaders;
  Eigen::MatrixXd a_ff;  // followers x followers
  Eigen::MatrixXd a_fl;  // followers x leaders
};

/// Splits `net` into follower and leader blocks. The leader set must be a
/// non-empty proper subset of the vertices with distinct, in-range indices.
LeaderPartition partition(const WeightedNetwork& net, std::span<const int> leaders);

/// Perturbs every existing (nonzero) weight by an independent draw from
/// Uniform(-amplitude, +amplitude). Zero entries stay zero. Undirected
/// networks get one draw per edge, applied to both triangle entries, so
/// symmetry is preserved exactly.
WeightedNetwork apply_noise(const WeightedNetwork& net, double amplitude, RandomStream& rng);

/// Divides every weight by mu > 0; structure and directedness are unchanged.
WeightedNetwork zoom(const WeightedNetwork& net, double mu);

/// Parse error with the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format. Header: `directed` or `undirected`, optionally
// followed by `order N` (needed for isolated vertices / empty graphs).
// Arcs: one per line, `u v w` with 1-based indices; an arc u -> v means
// u's state enters v's update, i.e. weights(v-1, u-1) = w.
WeightedNetwork read_edge_list(std::istream& in);
WeightedNetwork read_edge_list_file(const std::string& path);
void write_edge_list(const WeightedNetwork& net, std::ostream& out);
void write_edge_list_file(const WeightedNetwork& net, const std::string& path);
std::string to_edge_list(const WeightedNetwork& net);
WeightedNetwork parse_edge_list(const std::string& text);

}  // namespace netctrl
