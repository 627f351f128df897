#ifndef SEGREKIT_CORPUS_HPP
#define SEGREKIT_CORPUS_HPP

#include "segrekit/model.hpp"

#include <string>
#include <vector>

namespace segrekit {

/// One expectation of a corpus entry, with the computed value kept next to
/// the expected one so a mismatch prints a structured diff.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
};

/// A bundled worked example: the model/map description in the DSL, a note
/// on what the example demonstrates, and a runner that compares the full
/// pipeline against pinned expected outcomes.  Generator-set expectations
/// compare as reduced Groebner bases (display order and scalar factors in
/// the sources are not canonical); pinned-set expectations compare the
/// canonical generator strings themselves.
struct CorpusEntry {
  std::string id;
  std::string dsl;
  std::string note;
  std::vector<CheckResult> (*run)(const Problem &P);
};

/// All bundled entries, ordered by id.
const std::vector<CorpusEntry> &corpus();

/// Entry by id; nullptr when unknown.
const CorpusEntry *find_entry(const std::string &id);

/// Outcome of one entry: parse, validate, run, with any exception turned
/// into a failing check.
struct CorpusOutcome {
  std::string id;
  bool pass = false;
  std::vector<CheckResult> checks;
};

CorpusOutcome run_entry(const CorpusEntry &e);

} // namespace segrekit

#endif
