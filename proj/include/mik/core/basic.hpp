// Copyright 2026 The Mik Authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mik {

// Index into the owning name table (a KbDraft or a KnowledgeBase). Knowledge
// bases number their atoms in lexicographic name order, so ids are stable
// across reparses of canonical text.
using AtomId = std::uint32_t;

inline constexpr std::size_t kDefaultAtomBound = 24;   // world enumeration cap
inline constexpr std::size_t kOracleAtomBound = 8;     // subset oracle cap

// An atom with a polarity. Negation flips the polarity (involution); the
// parser folds `!a` into a negative literal, so `Not` never wraps a literal.
struct Literal {
    AtomId atom = 0;
    bool negative = false;

    Literal() = default;
    Literal(AtomId a, bool neg) : atom(a), negative(neg) {}

    Literal negated() const { return Literal(atom, !negative); }

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.atom == b.atom && a.negative == b.negative;
    }
    friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }
    friend bool operator<(const Literal& a, const Literal& b) {
        return a.atom != b.atom ? a.atom < b.atom : a.negative < b.negative;
    }
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AtomBoundExceeded : Error {
    explicit AtomBoundExceeded(std::size_t atoms, std::size_t bound)
        : Error("atom bound exceeded: " + std::to_string(atoms) + " atoms, bound " +
                std::to_string(bound)) {}
};

struct MissingModalContext : Error {
    MissingModalContext() : Error("modal operator evaluated without a context world set") {}
};

struct IncoherentFacts : Error {
    IncoherentFacts() : Error("facts are incoherent") {}
};

struct IncoherentObservations : Error {
    IncoherentObservations() : Error("observations are incoherent") {}
};

struct EmptyReferenceSet : Error {
    EmptyReferenceSet() : Error("weight needs a nonempty reference set") {}
};

struct EmptyCandidateSet : Error {
    EmptyCandidateSet() : Error("abduce needs a nonempty candidate set") {}
};

struct UnknownStartPattern : Error {
    explicit UnknownStartPattern(const std::string& pattern)
        : Error("no node in the implication space matches: " + pattern) {}
};

struct NoPositiveExamples : Error {
    explicit NoPositiveExamples(const std::string& label)
        : Error("no positive training examples for class: " + label) {}
};

struct UndeclaredAtom : Error {
    explicit UndeclaredAtom(const std::string& name) : Error("undeclared atom: " + name) {}
};

struct TableFormatError : Error {
    TableFormatError(const std::string& origin, std::size_t line, const std::string& what)
        : Error(origin + ":" + std::to_string(line) + ": " + what) {}
};

}  // namespace mik
