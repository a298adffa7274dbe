#pragma once

#include <string>
#include <vector>

#include "mknf/kb.hpp"

namespace mknf::golden {

// Built-in example knowledge bases, also shipped under kb/.
// A choice pair with a rule whose head the ontology falsifies.
extern const char* kEx1;
// kEx1 plus a rule deriving b from a; no well-founded model.
extern const char* kEx1Rule4;
// Choice pairs interleaved with an ontology that couples c to x and y.
extern const char* kEx3;
// Two undefined positive-body atoms feeding a falsified head.
extern const char* kEx4;

struct CaseResult {
  std::string name;
  bool pass;
  std::string detail;
};

// Runs the golden corpus; every case is expected to pass.
std::vector<CaseResult> run_selftest();

}  // namespace mknf::golden
