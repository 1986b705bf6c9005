#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "belief/rational.hpp"

namespace belt {

// A finite measurable space: an ordered carrier of named points together
// with the atom partition of its sigma-algebra. The measurable sets are
// exactly the unions of atoms.
struct Space {
  std::vector<std::string> points;                // carrier, fixed order
  std::vector<std::vector<std::size_t>> atoms;    // partition blocks, sorted
  std::vector<std::size_t> atom_of;               // point index -> atom index

  std::size_t size() const { return points.size(); }
  std::size_t atom_count() const { return atoms.size(); }

  // Throws PointNotInCarrier if absent.
  std::size_t index_of(std::string_view point) const;
  bool has_point(std::string_view point) const;

  bool operator==(const Space& other) const {
    return points == other.points && atoms == other.atoms;
  }
};

using SpacePtr = std::shared_ptr<const Space>;

// Discrete sigma-algebra: every singleton is an atom.
SpacePtr make_discrete_space(std::vector<std::string> points);

// Validates that `atoms` (given as point-index blocks) partitions the
// carrier; blocks are normalized to sorted order, blocks ordered by first
// element. Throws Schema on a non-partition.
SpacePtr make_space(std::vector<std::string> points,
                    std::vector<std::vector<std::size_t>> atoms);

// Smallest sigma-algebra containing every generator: atoms are the classes
// of "belongs to exactly the same generators".
SpacePtr generated_algebra(std::vector<std::string> points,
                           const std::vector<std::vector<std::size_t>>& generators);

// subset is a point mask over the carrier.
bool is_measurable(const Space& space, const std::vector<bool>& subset);

std::vector<bool> point_mask(const Space& space,
                             const std::vector<std::string>& pts);

// A measurable set, stored as the set of atoms it is the union of.
struct Event {
  SpacePtr space;
  std::vector<bool> blocks;  // over atoms

  static Event none(SpacePtr s);
  static Event all(SpacePtr s);

  Event complement() const;
  Event intersect(const Event& other) const;
  Event unite(const Event& other) const;

  bool contains_point(std::size_t point) const;
  bool empty() const;
  bool full() const;
  std::vector<std::size_t> point_indices() const;
  std::vector<std::string> point_names() const;
  std::vector<bool> points_mask() const;

  bool operator==(const Event& other) const;
};

// Converts a point mask to an Event; throws NonMeasurableMap if the mask
// splits an atom.
Event event_from_mask(SpacePtr space, const std::vector<bool>& mask);
Event event_from_points(SpacePtr space, const std::vector<std::string>& pts);

// An exact-rational probability measure, one weight per atom, summing to 1.
struct Measure {
  SpacePtr space;
  std::vector<Rat> weights;  // over atoms

  static Measure from_atom_weights(SpacePtr space, std::vector<Rat> weights);
  static Measure point_mass(SpacePtr space, std::size_t point);
  static Measure uniform(SpacePtr space);

  Rat of(const Event& e) const;  // SpaceMismatch if spaces differ
  // Outer measure of an arbitrary point subset: total weight of the atoms
  // that intersect it.
  Rat outer(const std::vector<bool>& subset) const;

  bool same_weights(const Measure& other) const { return weights == other.weights; }
};

// Product of finitely many spaces. Points are tuples, named by joining the
// factor point names with ","; atoms are products of factor atoms. Point
// and atom order is mixed-radix with the first factor most significant.
struct ProductSpace {
  SpacePtr space;
  std::vector<SpacePtr> factors;

  std::size_t factor_count() const { return factors.size(); }
  std::size_t point_index(std::span<const std::size_t> tuple) const;
  std::vector<std::size_t> tuple_of(std::size_t point) const;
  std::size_t component(std::size_t point, std::size_t factor) const;

  // E x product of the other factors, as an event of the product space.
  Event cylinder(std::size_t factor, const Event& factor_event) const;
};

ProductSpace product(std::vector<SpacePtr> factors);

// Marginal of a measure on a product space onto one factor.
Measure marginal(const ProductSpace& prod, const Measure& mu, std::size_t factor);

// Image measure under a point map; the map must be measurable (preimage of
// every target atom a union of source atoms), else NonMeasurableMap.
Measure pushforward(const Measure& mu, const std::vector<std::size_t>& map,
                    SpacePtr target);

// {d in domain : measures[d](e) >= theta}, exact comparison. The domain is
// indexed 0..measures.size()-1.
std::vector<bool> threshold_preimage(std::span<const Measure> measures,
                                     const Event& e, const Rat& theta);

}  // namespace belt
