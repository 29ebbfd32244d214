#include <charconv>
#include <string>
#include <vector>

#include "arrcoh/lattice_io.hpp"

namespace arrcoh {

namespace {

std::vector<int> parse_args(std::string_view rest, std::string_view name) {
  std::vector<int> out;
  while (!rest.empty()) {
    auto colon = rest.find(':');
    auto tok = rest.substr(0, colon);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ValidationError("bad builtin parameter in '" + std::string(name) + "'");
    out.push_back(v);
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  return out;
}

LabeledLattice boolean_lattice(int n) {
  if (n < 1 || n > 8) throw ValidationError("boolean:N needs 1 <= N <= 8");
  std::vector<QMatrix> lines;
  for (int i = 0; i < n; ++i) {
    QMatrix m(1, static_cast<std::size_t>(n));
    m.set(0, static_cast<std::size_t>(i), 1);
    lines.push_back(m);
  }
  return intersection_lattice(SubspaceArrangement(n, lines));
}

}  // namespace

LabeledLattice builtin_lattice(std::string_view name) {
  if (name == "oneline") {
    QMatrix m(1, 1);
    m.set(0, 0, 1);
    return intersection_lattice(SubspaceArrangement(1, {m}));
  }
  auto colon = name.find(':');
  auto head = name.substr(0, colon);
  std::vector<int> args = colon == std::string_view::npos ? std::vector<int>{} : parse_args(name.substr(colon + 1), name);
  if (head == "boolean" && args.size() == 1) return boolean_lattice(args[0]);
  if (head == "braid" && args.size() == 1) {
    if (args[0] < 2 || args[0] > 7) throw ValidationError("braid:N needs 2 <= N <= 7");
    return kequal_lattice(args[0], 2, 0);
  }
  if (head == "kequal" && (args.size() == 2 || args.size() == 3))
    return kequal_lattice(args[0], args[1], args.size() == 3 ? args[2] : 0);
  throw ValidationError("unknown builtin '" + std::string(name) +
                        "' (expected oneline, boolean:N, braid:N, kequal:N:K[:ELL])");
}

}  // namespace arrcoh
