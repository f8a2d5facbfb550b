#include "rwlattice/spec.hpp"

#include <charconv>
#include <limits>
#include <map>

#include "rwlattice/errors.hpp"

namespace rwl {

TopologySpec TopologySpec::mesh(int mu, int n) {
  if (n < 1) throw DomainError("mesh: n must be >= 1");
  if (mu < 2) throw DomainError("mesh: mu must be >= 2");
  return {Family::Mesh, n, mu, 0};
}

TopologySpec TopologySpec::hypercube(int n) {
  if (n < 1) throw DomainError("hypercube: n must be >= 1");
  return {Family::Hypercube, n, 2, 0};
}

TopologySpec TopologySpec::symplectic(int M, int n) {
  if (n < 1) throw DomainError("symplectic: n must be >= 1");
  if (M < 1) throw DomainError("symplectic: M must be >= 1");
  if (M > (std::numeric_limits<int>::max() - 1) / 2)
    throw DomainError("symplectic: M too large");
  return {Family::Symplectic, n, 2 * M + 1, M};
}

const char* family_name(Family family) {
  switch (family) {
    case Family::Mesh: return "mesh";
    case Family::Hypercube: return "hypercube";
    case Family::Symplectic: return "symplectic";
  }
  return "?";
}

namespace {

int parse_positive_int(std::string_view text, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw DomainError("spec: '" + std::string(token) +
                      "' is not a positive integer parameter");
  return value;
}

std::map<std::string, int, std::less<>> parse_params(std::string_view params,
                                                     std::string_view whole) {
  std::map<std::string, int, std::less<>> out;
  while (!params.empty()) {
    auto comma = params.find(',');
    std::string_view token = params.substr(0, comma);
    params = comma == std::string_view::npos ? std::string_view{}
                                             : params.substr(comma + 1);
    auto eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw DomainError("spec '" + std::string(whole) + "': expected key=value, got '" +
                        std::string(token) + "'");
    std::string key(token.substr(0, eq));
    if (out.count(key))
      throw DomainError("spec '" + std::string(whole) + "': duplicate parameter '" +
                        key + "'");
    out.emplace(std::move(key), parse_positive_int(token.substr(eq + 1), token));
  }
  return out;
}

int take(std::map<std::string, int, std::less<>>& params, std::string_view key,
         std::string_view whole) {
  auto it = params.find(key);
  if (it == params.end())
    throw DomainError("spec '" + std::string(whole) + "': missing parameter '" +
                      std::string(key) + "'");
  int value = it->second;
  params.erase(it);
  return value;
}

}  // namespace

TopologySpec parse_spec(std::string_view text) {
  auto colon = text.find(':');
  std::string_view family = text.substr(0, colon);
  std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto params = parse_params(rest, text);

  TopologySpec spec;
  if (family == "mesh") {
    int mu = take(params, "mu", text);
    int n = take(params, "n", text);
    spec = TopologySpec::mesh(mu, n);
  } else if (family == "hypercube") {
    spec = TopologySpec::hypercube(take(params, "n", text));
  } else if (family == "symplectic") {
    int M = take(params, "M", text);
    int n = take(params, "n", text);
    spec = TopologySpec::symplectic(M, n);
  } else {
    throw DomainError("spec '" + std::string(text) + "': unknown family '" +
                      std::string(family) + "'");
  }
  if (!params.empty())
    throw DomainError("spec '" + std::string(text) + "': unexpected parameter '" +
                      params.begin()->first + "'");
  return spec;
}

std::string format_spec(const TopologySpec& spec) {
  switch (spec.family) {
    case Family::Mesh:
      return "mesh:mu=" + std::to_string(spec.mu) + ",n=" + std::to_string(spec.n);
    case Family::Hypercube:
      return "hypercube:n=" + std::to_string(spec.n);
    case Family::Symplectic:
      return "symplectic:M=" + std::to_string(spec.M) + ",n=" + std::to_string(spec.n);
  }
  throw DomainError("format_spec: invalid family");
}

}  // namespace rwl
