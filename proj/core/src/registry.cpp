#include <set>

#include "catalog.hpp"
#include "combid/verify.hpp"

namespace combid {

std::vector<IdentitySpec> build_registry() {
  std::vector<IdentitySpec> specs;
  catalog::add_binomial_identities(specs);
  catalog::add_harmonic_identities(specs);
  catalog::add_traditional_identities(specs);
  catalog::add_derivative_identities(specs);

  std::set<std::string> seen;
  for (const auto& s : specs) {
    if (!seen.insert(s.id).second) throw DomainError("duplicate identity id " + s.id);
  }
  return specs;
}

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> specs = build_registry();
  return specs;
}

const IdentitySpec* find_identity(std::string_view id) {
  for (const auto& s : registry()) {
    if (s.id == id) return &s;
  }
  const IdentitySpec* match = nullptr;
  const std::string prefix = std::string(id) + "_";
  for (const auto& s : registry()) {
    if (s.id.starts_with(prefix)) {
      if (match) return nullptr;
      match = &s;
    }
  }
  return match;
}

}  // namespace combid
