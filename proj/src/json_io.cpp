#include "agc/json_io.hpp"

namespace agc {

namespace {

Json minterms(const Element& x) {
  Json arr = Json::array();
  for (int i = 0; i < x.algebra()->atom_count(); ++i) {
    if (x.bit(i)) arr.push_back(1u << i);
  }
  return arr;
}

}  // namespace

Json contract_json(const Contract& c) {
  Json j;
  j["assume"] = minterms(c.assume());
  j["guarantee"] = minterms(c.guarantee());
  return j;
}

Json eval_json(const EvalResult& result) {
  Json j;
  j["universe"] = result.algebra->atoms();
  Json bindings = Json::array();
  for (const auto& [name, value] : result.bindings) {
    Json b;
    b["name"] = name;
    b["value"] = contract_json(value);
    bindings.push_back(std::move(b));
  }
  j["bindings"] = std::move(bindings);
  Json queries = Json::array();
  for (const QueryOutcome& q : result.queries) {
    Json entry;
    entry["query"] = q.text;
    switch (q.kind) {
      case Query::Kind::Print: entry["kind"] = "print"; break;
      case Query::Kind::CheckRefines: entry["kind"] = "check_refines"; break;
      case Query::Kind::CheckEqual: entry["kind"] = "check_equal"; break;
      case Query::Kind::AssertCanonical: entry["kind"] = "assert_canonical"; break;
    }
    if (q.is_check) {
      entry["result"] = q.holds ? "holds" : "fails";
      entry["witness"] = q.holds ? Json(nullptr) : Json(q.output);
    } else {
      entry["value"] = q.output;
    }
    queries.push_back(std::move(entry));
  }
  j["queries"] = std::move(queries);
  j["all_checks_hold"] = result.all_checks_hold;
  return j;
}

}  // namespace agc
