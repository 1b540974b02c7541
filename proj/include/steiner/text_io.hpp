#pragma once

// Plain-text formats.
//
// STS file:   optional '#' comment lines, then a line `v`, then one block
//             `a b c` per line.
// Table file: optional '#' comment lines, then a line `m`, then m rows of m
//             space-separated entries. Loop files have identity 0.
//
// Writers emit the canonical form: sorted blocks, single spaces, one
// trailing newline, no comments.

#include <iosfwd>
#include <string>
#include <variant>

#include "steiner/algebra.hpp"

namespace steiner {

enum class FileKind { sts, loop, quasigroup };

std::string to_string(FileKind kind);

/// Reads an STS file. Non-canonical block order is accepted.
TripleSystem read_sts(std::istream& in);
CayleyTable read_table(std::istream& in);
LoopTable read_loop(std::istream& in);
QuasigroupTable read_quasigroup(std::istream& in);

void write_sts(std::ostream& out, const TripleSystem& s);
void write_table(std::ostream& out, const CayleyTable& t);

std::string format_sts(const TripleSystem& s);
std::string format_table(const CayleyTable& t);

using AnyStructure = std::variant<TripleSystem, LoopTable, QuasigroupTable>;

/// Infers the file kind from line arity: a table has exactly m rows of m
/// entries; anything else is read as an STS. A table whose element 0 is a
/// two-sided identity is a loop, otherwise a quasigroup.
FileKind infer_kind(const std::string& text);
AnyStructure read_structure(const std::string& text, FileKind kind);
AnyStructure read_structure(const std::string& text);

AnyStructure load_structure(const std::string& path);
AnyStructure load_structure(const std::string& path, FileKind kind);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace steiner
