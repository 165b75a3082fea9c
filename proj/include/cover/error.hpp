#ifndef COVER_ERROR_HPP
#define COVER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cover {

// Error categories surfaced through exit codes by the CLI.
enum class ErrorKind {
  Alphabet,      // bad generator index / alphabet mismatch
  SizeLimit,     // group closure exceeded the configured bound
  InvalidCover,  // Riemann-Hurwitz or generating-vector violation
  Transversal,   // override words are not a Schreier transversal
  NotInKernel,   // tau applied to a word outside ker(phi)
  Budget,        // Tietze relator length budget exceeded
  Integrity,     // pipeline invariant broken (rank != 2g, torsion, ...)
  Parse,         // input document malformed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cover

#endif
