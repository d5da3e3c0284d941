#include "asms/triples.hpp"

#include <algorithm>
#include <json.hpp>

#include "asms/error.hpp"

namespace asms {

ZeroSumTripleSystem build_triples(const ExtendedLangfordSequence& seq) {
  if (const auto v = validate_sequence(seq); !v)
    throw InvalidSequence(std::string("build_triples: ") + to_string(v.rule) + ": " + v.message);
  const int d = seq.d(), m = seq.m(), k = seq.k();
  const Entry offset = d + m - 1;

  std::vector<Triple> ts(static_cast<std::size_t>(2 * m + 1));
  ZeroSumTripleSystem out(d, m, k, std::move(ts));
  out[0] = {k + offset, -(k + offset), 0};
  const auto pairs = seq.pairs();
  for (int i = 1; i <= m; ++i) {
    const auto [a, b] = pairs[static_cast<std::size_t>(i - 1)];
    out[i] = {i + d - 1, a + offset, -(b + offset)};
    out[-i] = -out[i];
  }
  return out;
}

PartitionValidation validate_partition(const ZeroSumTripleSystem& ts) {
  const int d = ts.d(), m = ts.m();
  const auto fail = [](std::string msg) { return PartitionValidation{false, std::move(msg)}; };
  if (m < 0 || ts.size() != static_cast<std::size_t>(2 * m + 1) || ts.size() == 0)
    return fail(ts.size() == 0 ? "missing T_0" : "expected " + std::to_string(2 * m + 1) + " triples");

  for (int i = -m; i <= m; ++i)
    if (ts[i].sum() != 0)
      return fail("T_" + std::to_string(i) + " sums to " + std::to_string(ts[i].sum()));

  // Expected cover: [d, d+3m] ∪ [-d-3m, -d] ∪ {0}, each value once.
  const Entry top = d + 3 * static_cast<Entry>(m);
  const auto slot_of = [&](Entry v) -> std::ptrdiff_t {
    if (v == 0) return 0;
    const Entry a = v < 0 ? -v : v;
    if (a < d || a > top) return -1;
    return 1 + (a - d) * 2 + (v < 0);
  };
  std::vector<int> seen(static_cast<std::size_t>(1 + 2 * (top - d + 1)), 0);
  for (int i = -m; i <= m; ++i) {
    for (Entry v : {ts[i].x, ts[i].y, ts[i].z}) {
      const auto s = slot_of(v);
      if (s < 0) return fail("T_" + std::to_string(i) + " contains " + std::to_string(v) + ", outside the cover set");
      if (seen[static_cast<std::size_t>(s)]++)
        return fail("value " + std::to_string(v) + " appears more than once (again in T_" + std::to_string(i) + ")");
    }
  }
  // 3(2m+1) values landed in distinct slots of a set of size 6m+3, so the cover is exact.
  return {};
}

std::string triples_to_json(const ZeroSumTripleSystem& ts) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (int i = -ts.m(); i <= ts.m() && ts.size() == static_cast<std::size_t>(2 * ts.m() + 1); ++i)
    j[std::to_string(i)] = {ts[i].x, ts[i].y, ts[i].z};
  return j.dump();
}

}  // namespace asms
