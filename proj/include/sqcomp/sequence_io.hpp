#pragma once

// Sequence files: one decimal element per line, ascending. An optional
// leading line starting with '#' carries the label. Blank lines are ignored.

#include <filesystem>
#include <iosfwd>

#include "sqcomp/sequences.hpp"

namespace sqcomp {

// Throws ParseError with the 1-based offending line.
ComplementCandidate read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const ComplementCandidate& w);

ComplementCandidate load_sequence(const std::filesystem::path& path);
void save_sequence(const std::filesystem::path& path, const ComplementCandidate& w);

}  // namespace sqcomp
