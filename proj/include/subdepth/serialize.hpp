#pragma once

#include <string>

#include "json.hpp"

#include "subdepth/cartan.hpp"
#include "subdepth/chartab.hpp"
#include "subdepth/depthcore.hpp"

namespace subdepth {

using Json = nlohmann::json;

inline constexpr int kTableSchemaVersion = 1;

/// Indented like dump(2), but arrays of scalars stay on one line.
std::string pretty_json(const Json& j);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const mpz_class& x);
mpz_class mpz_from_json(const Json& j);

/// Rationals become "p/q" strings; anything else is
/// {"conductor", "denominator", "numerators"} with numerators dense or, when
/// mostly zero, as "sparse": [[index, numerator], ...].
Json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// "order-degree-classsizes-generatorhash"; used as the cache key.
std::string fingerprint(const PermutationGroup& g);

Json classes_json(const PermutationGroup& g);

/// Versioned, lossless. The Dixon prime is deliberately not stored.
Json to_json(const CharacterTable& table);
/// Rebuilds a table for `g`. Throws TableMismatch if the fingerprint, version
/// or class representatives disagree, and InvalidInput on malformed values.
CharacterTable table_from_json(const Json& j, const PermutationGroup& g);

struct SerializeOptions {
  bool certificates = false;
};

Json to_json(const DepthReport& r, const SerializeOptions& opt = {});
DepthReport depth_report_from_json(const Json& j);
Json to_json(const IntervalCheck& c);
Json to_json(const ModuleDepthReport& r);
Json to_json(const DoubleDepthReport& r, const SerializeOptions& opt = {});
Json to_json(const DiagonalDepthReport& r, const SerializeOptions& opt = {});
Json to_json(const CorefreeReport& r, const SerializeOptions& opt = {});
Json to_json(const SupportChainReport& r);
Json to_json(const BurnsideBrauerReport& r);

Json to_json(const AlgebraMatrixData& d);
AlgebraMatrixData algebra_data_from_json(const Json& j);
Json to_json(const ValidationReport& r);
Json to_json(const NecessaryConditionResult& r, const SerializeOptions& opt = {});

}  // namespace subdepth
