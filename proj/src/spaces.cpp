#include "belief/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "belief/errors.hpp"

namespace belt {

namespace {

void check_unique_points(const std::vector<std::string>& points) {
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrKind::Schema, "duplicate point id in carrier");
}

}  // namespace

std::size_t Space::index_of(std::string_view point) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == point) return i;
  throw Error(ErrKind::PointNotInCarrier, "'" + std::string(point) + "'");
}

bool Space::has_point(std::string_view point) const {
  return std::find(points.begin(), points.end(), point) != points.end();
}

SpacePtr make_discrete_space(std::vector<std::string> points) {
  std::vector<std::vector<std::size_t>> atoms;
  atoms.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) atoms.push_back({i});
  return make_space(std::move(points), std::move(atoms));
}

SpacePtr make_space(std::vector<std::string> points,
                    std::vector<std::vector<std::size_t>> atoms) {
  check_unique_points(points);
  auto space = std::make_shared<Space>();
  space->points = std::move(points);
  for (auto& block : atoms) {
    if (block.empty()) throw Error(ErrKind::Schema, "empty atom block");
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw Error(ErrKind::Schema, "repeated point in atom block");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  space->atom_of.assign(space->points.size(), SIZE_MAX);
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (std::size_t p : atoms[a]) {
      if (p >= space->points.size())
        throw Error(ErrKind::Schema, "atom block references point out of range");
      if (space->atom_of[p] != SIZE_MAX)
        throw Error(ErrKind::Schema, "atom blocks overlap");
      space->atom_of[p] = a;
    }
  }
  for (std::size_t p = 0; p < space->points.size(); ++p)
    if (space->atom_of[p] == SIZE_MAX)
      throw Error(ErrKind::Schema, "atom blocks do not cover the carrier");
  space->atoms = std::move(atoms);
  return space;
}

SpacePtr generated_algebra(std::vector<std::string> points,
                           const std::vector<std::vector<std::size_t>>& generators) {
  const std::size_t n = points.size();
  // Signature of a point: which generators contain it.
  std::vector<std::vector<bool>> sig(n, std::vector<bool>(generators.size(), false));
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (std::size_t p : generators[g]) {
      if (p >= n) throw Error(ErrKind::Schema, "generator references point out of range");
      sig[p][g] = true;
    }
  std::vector<std::vector<std::size_t>> atoms;
  std::vector<bool> assigned(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (assigned[p]) continue;
    std::vector<std::size_t> block{p};
    assigned[p] = true;
    for (std::size_t q = p + 1; q < n; ++q)
      if (!assigned[q] && sig[q] == sig[p]) {
        block.push_back(q);
        assigned[q] = true;
      }
    atoms.push_back(std::move(block));
  }
  return make_space(std::move(points), std::move(atoms));
}

bool is_measurable(const Space& space, const std::vector<bool>& subset) {
  for (const auto& block : space.atoms) {
    bool first = subset[block.front()];
    for (std::size_t p : block)
      if (subset[p] != first) return false;
  }
  return true;
}

std::vector<bool> point_mask(const Space& space, const std::vector<std::string>& pts) {
  std::vector<bool> mask(space.size(), false);
  for (const auto& name : pts) mask[space.index_of(name)] = true;
  return mask;
}

Event Event::none(SpacePtr s) {
  Event e;
  e.blocks.assign(s->atom_count(), false);
  e.space = std::move(s);
  return e;
}

Event Event::all(SpacePtr s) {
  Event e;
  e.blocks.assign(s->atom_count(), true);
  e.space = std::move(s);
  return e;
}

Event Event::complement() const {
  Event e{space, blocks};
  e.blocks.flip();
  return e;
}

Event Event::intersect(const Event& other) const {
  if (!(*space == *other.space))
    throw Error(ErrKind::SpaceMismatch, "event intersection across spaces");
  Event e{space, blocks};
  for (std::size_t i = 0; i < e.blocks.size(); ++i)
    e.blocks[i] = e.blocks[i] && other.blocks[i];
  return e;
}

Event Event::unite(const Event& other) const {
  if (!(*space == *other.space))
    throw Error(ErrKind::SpaceMismatch, "event union across spaces");
  Event e{space, blocks};
  for (std::size_t i = 0; i < e.blocks.size(); ++i)
    e.blocks[i] = e.blocks[i] || other.blocks[i];
  return e;
}

bool Event::contains_point(std::size_t point) const {
  return blocks[space->atom_of[point]];
}

bool Event::empty() const {
  return std::none_of(blocks.begin(), blocks.end(), [](bool b) { return b; });
}

bool Event::full() const {
  return std::all_of(blocks.begin(), blocks.end(), [](bool b) { return b; });
}

std::vector<std::size_t> Event::point_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < space->size(); ++p)
    if (contains_point(p)) out.push_back(p);
  return out;
}

std::vector<std::string> Event::point_names() const {
  std::vector<std::string> out;
  for (std::size_t p : point_indices()) out.push_back(space->points[p]);
  return out;
}

std::vector<bool> Event::points_mask() const {
  std::vector<bool> mask(space->size(), false);
  for (std::size_t p = 0; p < space->size(); ++p)
    if (contains_point(p)) mask[p] = true;
  return mask;
}

bool Event::operator==(const Event& other) const {
  return *space == *other.space && blocks == other.blocks;
}

Event event_from_mask(SpacePtr space, const std::vector<bool>& mask) {
  if (mask.size() != space->size())
    throw Error(ErrKind::SpaceMismatch, "point mask size does not match carrier");
  if (!is_measurable(*space, mask))
    throw Error(ErrKind::NonMeasurableMap, "point set splits an atom");
  Event e = Event::none(space);
  for (std::size_t p = 0; p < mask.size(); ++p)
    if (mask[p]) e.blocks[space->atom_of[p]] = true;
  return e;
}

Event event_from_points(SpacePtr space, const std::vector<std::string>& pts) {
  return event_from_mask(space, point_mask(*space, pts));
}

Measure Measure::from_atom_weights(SpacePtr space, std::vector<Rat> weights) {
  if (weights.size() != space->atom_count())
    throw Error(ErrKind::Schema, "measure weight count does not match atom count");
  Rat total = 0;
  for (const Rat& w : weights) {
    if (w < 0) throw Error(ErrKind::Schema, "negative measure weight");
    total += w;
  }
  if (total != 1) throw Error(ErrKind::Schema, "measure weights sum to " + rat_to_string(total));
  return Measure{std::move(space), std::move(weights)};
}

Measure Measure::point_mass(SpacePtr space, std::size_t point) {
  if (point >= space->size())
    throw Error(ErrKind::PointNotInCarrier, "point index out of range");
  std::vector<Rat> w(space->atom_count(), Rat(0));
  w[space->atom_of[point]] = 1;
  return Measure{std::move(space), std::move(w)};
}

Measure Measure::uniform(SpacePtr space) {
  std::vector<Rat> w(space->atom_count(),
                     Rat(1, static_cast<long>(space->atom_count())));
  return Measure{std::move(space), std::move(w)};
}

Rat Measure::of(const Event& e) const {
  if (!(*space == *e.space))
    throw Error(ErrKind::SpaceMismatch, "measure applied to foreign event");
  Rat total = 0;
  for (std::size_t a = 0; a < weights.size(); ++a)
    if (e.blocks[a]) total += weights[a];
  return total;
}

Rat Measure::outer(const std::vector<bool>& subset) const {
  if (subset.size() != space->size())
    throw Error(ErrKind::SpaceMismatch, "subset mask size does not match carrier");
  // Smallest covering event = union of the atoms intersecting the subset.
  std::vector<bool> hit(space->atom_count(), false);
  for (std::size_t p = 0; p < subset.size(); ++p)
    if (subset[p]) hit[space->atom_of[p]] = true;
  Rat total = 0;
  for (std::size_t a = 0; a < hit.size(); ++a)
    if (hit[a]) total += weights[a];
  return total;
}

ProductSpace product(std::vector<SpacePtr> factors) {
  if (factors.empty()) throw Error(ErrKind::Schema, "empty product");
  std::size_t n = 1, atom_total = 1;
  for (const auto& f : factors) {
    n *= f->size();
    atom_total *= f->atom_count();
  }
  std::vector<std::string> names;
  names.reserve(n);
  std::vector<std::size_t> tuple(factors.size(), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::string name;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) name += ',';
      name += factors[k]->points[tuple[k]];
    }
    names.push_back(std::move(name));
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++tuple[k] < factors[k]->size()) break;
      tuple[k] = 0;
    }
  }
  // Product atoms: one block per tuple of factor atoms.
  std::vector<std::vector<std::size_t>> atoms(atom_total);
  std::vector<std::size_t> radix(factors.size());
  {
    std::size_t r = 1;
    for (std::size_t k = factors.size(); k-- > 0;) {
      radix[k] = r;
      r *= factors[k]->size();
    }
  }
  std::fill(tuple.begin(), tuple.end(), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t atom_idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k)
      atom_idx = atom_idx * factors[k]->atom_count() +
                 factors[k]->atom_of[tuple[k]];
    atoms[atom_idx].push_back(idx);
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++tuple[k] < factors[k]->size()) break;
      tuple[k] = 0;
    }
  }
  ProductSpace prod;
  prod.space = make_space(std::move(names), std::move(atoms));
  prod.factors = std::move(factors);
  return prod;
}

std::size_t ProductSpace::point_index(std::span<const std::size_t> tuple) const {
  if (tuple.size() != factors.size())
    throw Error(ErrKind::ArityMismatch, "tuple length does not match factor count");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (tuple[k] >= factors[k]->size())
      throw Error(ErrKind::PointNotInCarrier, "factor point index out of range");
    idx = idx * factors[k]->size() + tuple[k];
  }
  return idx;
}

std::vector<std::size_t> ProductSpace::tuple_of(std::size_t point) const {
  std::vector<std::size_t> tuple(factors.size());
  for (std::size_t k = factors.size(); k-- > 0;) {
    tuple[k] = point % factors[k]->size();
    point /= factors[k]->size();
  }
  return tuple;
}

std::size_t ProductSpace::component(std::size_t point, std::size_t factor) const {
  if (factor >= factors.size())
    throw Error(ErrKind::FactorIndexOutOfRange, "factor index out of range");
  for (std::size_t k = factors.size(); k-- > factor + 1;) point /= factors[k]->size();
  return point % factors[factor]->size();
}

Event ProductSpace::cylinder(std::size_t factor, const Event& factor_event) const {
  if (factor >= factors.size())
    throw Error(ErrKind::FactorIndexOutOfRange, "factor index out of range");
  if (!(*factor_event.space == *factors[factor]))
    throw Error(ErrKind::SpaceMismatch, "cylinder base from a different factor space");
  Event e = Event::none(space);
  for (std::size_t p = 0; p < space->size(); ++p)
    if (factor_event.contains_point(component(p, factor)))
      e.blocks[space->atom_of[p]] = true;
  return e;
}

Measure marginal(const ProductSpace& prod, const Measure& mu, std::size_t factor) {
  if (factor >= prod.factors.size())
    throw Error(ErrKind::FactorIndexOutOfRange, "factor index out of range");
  if (!(*mu.space == *prod.space))
    throw Error(ErrKind::SpaceMismatch, "measure is not on the product space");
  const Space& target = *prod.factors[factor];
  std::vector<Rat> w(target.atom_count(), Rat(0));
  for (std::size_t a = 0; a < prod.space->atom_count(); ++a) {
    if (mu.weights[a] == 0) continue;
    std::size_t rep = prod.space->atoms[a].front();
    w[target.atom_of[prod.component(rep, factor)]] += mu.weights[a];
  }
  return Measure{prod.factors[factor], std::move(w)};
}

Measure pushforward(const Measure& mu, const std::vector<std::size_t>& map,
                    SpacePtr target) {
  const Space& src = *mu.space;
  if (map.size() != src.size())
    throw Error(ErrKind::NonMeasurableMap, "point map size does not match carrier");
  for (std::size_t p : map)
    if (p >= target->size())
      throw Error(ErrKind::PointNotInCarrier, "map target out of range");
  // Measurability: preimage of every target atom must be a union of
  // source atoms, i.e. the target atom of map(p) is constant on source atoms.
  for (const auto& block : src.atoms) {
    std::size_t first = target->atom_of[map[block.front()]];
    for (std::size_t p : block)
      if (target->atom_of[map[p]] != first)
        throw Error(ErrKind::NonMeasurableMap,
                    "map is not measurable: target atom varies within source atom");
  }
  std::vector<Rat> w(target->atom_count(), Rat(0));
  for (std::size_t a = 0; a < src.atom_count(); ++a)
    w[target->atom_of[map[src.atoms[a].front()]]] += mu.weights[a];
  return Measure{std::move(target), std::move(w)};
}

std::vector<bool> threshold_preimage(std::span<const Measure> measures,
                                     const Event& e, const Rat& theta) {
  std::vector<bool> out(measures.size(), false);
  for (std::size_t d = 0; d < measures.size(); ++d)
    out[d] = measures[d].of(e) >= theta;
  return out;
}

}  // namespace belt
