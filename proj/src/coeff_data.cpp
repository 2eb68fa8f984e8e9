#include "blasius/coeff_data.hpp"

#include <json.hpp>

#include "coeff_data_embed.hpp"

namespace blasius {

namespace {

CoeffData parse() {
  auto j = nlohmann::json::parse(detail::kCoeffJson);
  CoeffData d;
  for (const auto& pair : j.at("inner_base"))
    d.inner_base.emplace_back(pair.at(0).get<long>(), pair.at(1).get<long>());
  for (const auto& row : j.at("inner_family")) {
    std::vector<Rational> r;
    for (const auto& pair : row)
      r.emplace_back(pair.at(0).get<long>(), pair.at(1).get<long>());
    d.inner_family.push_back(std::move(r));
  }
  if (d.inner_base.size() != 13 || d.inner_family.size() != 14)
    throw std::runtime_error("coefficient data: unexpected table shape");
  for (const auto& row : d.inner_family)
    if (row.size() != 6) throw std::runtime_error("coefficient data: unexpected row width");
  return d;
}

long mod_sum(const CoeffData& d, bool numerators) {
  const long p = 1000003;
  mpz_class total = 0;
  auto add = [&](const Rational& r) { total += numerators ? r.num() : r.den(); };
  for (const auto& r : d.inner_base) add(r);
  for (const auto& row : d.inner_family)
    for (const auto& r : row) add(r);
  mpz_class m = total % p;
  if (m < 0) m += p;
  return m.get_si();
}

}  // namespace

long CoeffData::numerator_checksum() const { return mod_sum(*this, true); }
long CoeffData::denominator_checksum() const { return mod_sum(*this, false); }

const CoeffData& CoeffData::instance() {
  static const CoeffData data = parse();
  return data;
}

}  // namespace blasius
