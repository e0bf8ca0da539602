#pragma once

#include <string>

#include "quiverh1/field.hpp"
#include "quiverh1/quiver.hpp"

namespace qh1 {

/// A parsed presentation file: field, quiver, relations.
struct InputDocument {
    FieldSpec field;
    Quiver quiver;
    RelationSet relations;
};

/// Line-oriented grammar (`#` starts a comment):
///   field rational | field prime <p>
///   vertex <name>...
///   arrow <name> : <src> -> <dst>
///   relation <arrow> <arrow> ...     (traversal order, first-traversed first)
/// Throws Error with line/column diagnostics.
InputDocument parse_input(const std::string& text);

} // namespace qh1
