#pragma once

// JSON encodings of the domain types (nlohmann::json ADL hooks).
//
//   KTuple            [1,2]
//   TupleSet          [[0,0],[0,1]]
//   Cube              {"elements":[2,5],"k":2}
//   FiniteFunction    {"id":"f0","k":2,"entries":[[[1,2],1],...]}
//   Family            {"k":2,"members":[<FiniteFunction>,...]}  (a bare array is accepted)
//   RegularityReport  {"overall":true,"per_class":{"(0,1)":{"verdict":"Case2"},...}}
//   IntMultiset       [[value,multiplicity],...] ascending by value
//   GammaTriple       {"g0":"zigzag","g1":"zigzag","g2":"shifted:10"}

#include "jumpfree/core.hpp"
#include "jumpfree/families.hpp"
#include "jumpfree/intsets.hpp"
#include "jumpfree/predicates.hpp"
#include "jumpfree/subsetsum.hpp"

#include <json.hpp>

namespace jumpfree {

using json = nlohmann::json;

void to_json(json &j, const KTuple &x);
void from_json(const json &j, KTuple &x);

json tuple_set_to_json(const TupleSet &d);
TupleSet tuple_set_from_json(const json &j);

void to_json(json &j, const Cube &c);
Cube cube_from_json(const json &j);

void to_json(json &j, const FiniteFunction &f);
void from_json(const json &j, FiniteFunction &f);

void to_json(json &j, const Family &fam);
void from_json(const json &j, Family &fam);

void to_json(json &j, const JumpFreeWitness &w);
void to_json(json &j, const ClassVerdict &v);
void to_json(json &j, const RegularityReport &r);

void to_json(json &j, const UniverseSpec &u);
void from_json(const json &j, UniverseSpec &u);

void to_json(json &j, const SearchStats &s);
void to_json(json &j, const WitnessResult &w);

void to_json(json &j, const IntMultiset &ms);
void from_json(const json &j, IntMultiset &ms);

void to_json(json &j, const ZBijection &g);
void to_json(json &j, const GammaTriple &g);
void from_json(const json &j, GammaTriple &g);

void to_json(json &j, const SubsetCertificate &c);
void to_json(json &j, const ExperimentReport &r);

} // namespace jumpfree
