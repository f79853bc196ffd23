#pragma once

#include <stdexcept>
#include <string>

namespace treekkm {

/// Structurally malformed input: unparseable rationals, bad ids, wrong shapes.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed input that violates a semantic precondition: improper labelling,
/// invalid cover, a map with a fixed vertex where none is allowed, and so on.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace treekkm
