#pragma once

#include <memory>
#include <string>
#include <vector>

#include "isoprod/presentation.hpp"
#include "isoprod/todd_coxeter.hpp"

namespace isoprod {

/// Input file could not be parsed; carries the offending line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

/// A parsed datum: the realized group plus both generating vectors.
/// Not copyable/movable: the vectors point into `group`.
struct InputDatum {
  FiniteGroup group;
  GeneratingVector v1, v2;

  InputDatum() = default;
  InputDatum(const InputDatum&) = delete;
  InputDatum& operator=(const InputDatum&) = delete;
};

/// Parse the sectioned text format:
///
///   [group]
///   perm 5                    # or: abelian 5 5   /   fp 3
///   gen a = (1 2 3 4 5)       # perm groups: named cycle-notation generators
///   gen b = (1 2 3)
///   # fp groups instead use:  names x y z   (optional)  and  rel x^4  lines
///
///   [vector1]
///   genus 0
///   (2 4)(3 5)                # perm: cycles; abelian: tuple like (1, 0)
///   a b^-1 a                  # or a word in generator names
///
///   [vector2]
///   ...
///
/// '#' starts a comment. With genus g, the first 2g element lines are the
/// hyperbolic part. Abelian generators are named e1, e2, ...; fp generators
/// default to x1, x2, ...
std::unique_ptr<InputDatum> parse_input_text(const std::string& text,
                                             int coset_cap = kDefaultCosetCap);

std::unique_ptr<InputDatum> parse_input_file(const std::string& path,
                                             int coset_cap = kDefaultCosetCap);

}  // namespace isoprod
