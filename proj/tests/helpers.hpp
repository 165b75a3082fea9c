#ifndef COVER_TESTS_HELPERS_HPP
#define COVER_TESTS_HELPERS_HPP

#include "cover/spec_io.hpp"

namespace cover::testing {

inline ParsedSpec example(const std::string& name) {
  return buildSpec(parseInput(builtinExample(name)));
}

}  // namespace cover::testing

#endif
