// Copyright 2026 The Mik Authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mik::lang {

// A unit of DSL input plus a label for diagnostics ("<stdin>", file path…).
struct SourceText {
    std::string content;
    std::string origin = "<string>";
};

// 1-based line/column; length in characters. line == 0 means "no position"
// (used by validation errors on synthetic drafts).
struct Span {
    std::size_t line = 0;
    std::size_t column = 0;
    std::size_t length = 0;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string message;
    Span span;
};

std::string format_diagnostic(const SourceText& src, const Diagnostic& d);

}  // namespace mik::lang
