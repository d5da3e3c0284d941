#include "asms/cubes.hpp"

#include <algorithm>
#include <json.hpp>

#include "asms/error.hpp"

namespace asms {

namespace {

void require_zero_sum(const Triple& t, const char* what) {
  if (t.sum() != 0)
    throw NonZeroSumTriple(std::string(what) + ": triple (" + std::to_string(t.x) + "," +
                           std::to_string(t.y) + "," + std::to_string(t.z) + ") sums to " +
                           std::to_string(t.sum()));
}

nlohmann::json to_json_rows(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<Entry>(row.begin(), row.end()));
  }
  return rows;
}

}  // namespace

std::vector<Entry> MagicCube::entries() const {
  std::vector<Entry> out;
  out.reserve(27);
  for (const auto& s : slices) out.insert(out.end(), s.values().begin(), s.values().end());
  return out;
}

MagicCube build_cube(const Triple& t, int index) {
  require_zero_sum(t, "build_cube");
  const Entry x = 9 * t.x, y = 9 * t.y, z = 9 * t.z;
  MagicCube c;
  c.index = index;
  c.slices[0] = IntMatrix{{x + 1, z - 4, y + 3},
                          {z - 3, y + 4, x - 1},
                          {y + 2, x, z - 2}};
  c.slices[1] = IntMatrix{{y - 3, x + 4, z - 1},
                          {x + 2, z, y - 2},
                          {z + 1, y - 4, x + 3}};
  c.slices[2] = IntMatrix{{z + 2, y, x - 2},
                          {y + 1, x - 4, z + 3},
                          {x - 3, z + 4, y - 1}};
  return c;
}

MagicCube negate_cube(const MagicCube& cube) {
  MagicCube out = cube;
  out.negated = !cube.negated;
  for (auto& s : out.slices) s = s.negated();
  return out;
}

bool satisfies_cube_invariants(const MagicCube& cube) {
  for (const auto& s : cube.slices)
    if (s.rows() != 3 || s.cols() != 3 || !is_qmr_star(s)) return false;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (cube.slices[0](r, c) + cube.slices[1](r, c) + cube.slices[2](r, c) != 0) return false;
  return cube.slices[1].main_diagonal_sum() == 0;
}

std::vector<Entry> cube_entry_coverage(std::span<const MagicCube> cubes) {
  if (cubes.empty() || cubes.size() % 2 == 0)
    throw CoverageViolation("expected 2m+1 cubes, got " + std::to_string(cubes.size()));
  const Entry m = static_cast<Entry>(cubes.size() - 1) / 2;
  const Entry top = 40 + 27 * m;

  std::vector<Entry> expected;
  expected.reserve(static_cast<std::size_t>(27 * (2 * m + 1)));
  for (Entry v = -top; v <= -32; ++v) expected.push_back(v);
  for (Entry v = -4; v <= 4; ++v) expected.push_back(v);
  for (Entry v = 32; v <= top; ++v) expected.push_back(v);

  std::vector<Entry> actual;
  actual.reserve(expected.size());
  for (const auto& c : cubes) {
    const auto e = c.entries();
    actual.insert(actual.end(), e.begin(), e.end());
  }
  std::sort(actual.begin(), actual.end());
  if (const auto dup = std::adjacent_find(actual.begin(), actual.end()); dup != actual.end())
    throw CoverageViolation("value " + std::to_string(*dup) + " appears more than once");
  std::vector<Entry> missing;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  if (!missing.empty()) throw CoverageViolation("value " + std::to_string(missing.front()) + " is missing");
  std::vector<Entry> extra;
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  if (!extra.empty()) throw CoverageViolation("value " + std::to_string(extra.front()) + " is outside S");
  return expected;
}

BorderBlock build_p_block(const Triple& t, int index) {
  require_zero_sum(t, "build_p_block");
  if (index < 1) throw PreconditionViolated("P block index must be >= 1");
  const Entry x = 9 * t.x, y = 9 * t.y, z = 9 * t.z;
  return {BorderKind::kP, index,
          IntMatrix{{1 - z, 3 - y, -x - 4},
                    {z - 1, y - 3, x + 4},
                    {2 - y, -x - 2, -z},
                    {y - 2, x + 2, z},
                    {-x - 3, -z - 1, 4 - y},
                    {x + 3, z + 1, y - 4}}};
}

BorderBlock build_q_block(const Triple& t, int index) {
  require_zero_sum(t, "build_q_block");
  if (index < 1) throw PreconditionViolated("Q block index must be >= 1");
  const Entry x = 9 * t.x, y = 9 * t.y, z = 9 * t.z;
  return {BorderKind::kQ, index,
          IntMatrix{{z + 2, -z - 2, y + 1, -y - 1, x - 3, 3 - x},
                    {y, -y, x - 4, 4 - x, z + 4, -z - 4},
                    {x - 2, 2 - x, z + 3, -z - 3, y - 1, 1 - y}}};
}

bool satisfies_border_properties(const BorderBlock& block) {
  const IntMatrix& e = block.entries;
  if (block.kind == BorderKind::kP) {
    if (e.rows() != 6 || e.cols() != 3) return false;
    return is_qmr_star(e) && is_qmr_star(e.sub(2, 0, 4, 3)) && is_qmr_star(e.sub(4, 0, 2, 3));
  }
  if (e.rows() != 3 || e.cols() != 6) return false;
  return is_qmr_star(e) && is_qmr_star(e.sub(0, 2, 3, 4)) && is_qmr_star(e.sub(0, 4, 3, 2));
}

std::string cube_to_json(const MagicCube& cube) {
  nlohmann::ordered_json j;
  j["i"] = cube.index;
  j["sign"] = cube.negated ? -1 : 1;
  j["slices"] = {to_json_rows(cube.slices[0]), to_json_rows(cube.slices[1]), to_json_rows(cube.slices[2])};
  return j.dump();
}

std::string border_to_json(const BorderBlock& block) {
  nlohmann::ordered_json j;
  j["kind"] = block.kind == BorderKind::kP ? "P" : "Q";
  j["i"] = block.index;
  j["rows"] = to_json_rows(block.entries);
  return j.dump();
}

}  // namespace asms
