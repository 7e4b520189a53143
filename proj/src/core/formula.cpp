// Copyright 2026 The Mik Authors
// Licensed under the Apache License, Version 2.0.

#include "mik/core/formula.hpp"

#include <algorithm>

namespace mik {

Formula Formula::lit(Literal l) {
    Formula f;
    f.kind_ = Kind::Lit;
    f.lit_ = l;
    return f;
}

Formula Formula::negation(Formula f) {
    if (f.kind_ == Kind::Lit) return lit(f.lit_.negated());
    if (f.kind_ == Kind::Not) return std::move(f.kids_[0]);
    return Formula(Kind::Not, {std::move(f)});
}

Formula Formula::conj(std::vector<Formula> kids) {
    if (kids.size() == 1) return std::move(kids[0]);
    return Formula(Kind::And, std::move(kids));
}

Formula Formula::disj(std::vector<Formula> kids) {
    if (kids.size() == 1) return std::move(kids[0]);
    return Formula(Kind::Or, std::move(kids));
}

Formula Formula::implies(Formula a, Formula b) {
    std::vector<Formula> kids;
    kids.push_back(std::move(a));
    kids.push_back(std::move(b));
    return Formula(Kind::Implies, std::move(kids));
}

Formula Formula::possibly(Formula f) { return Formula(Kind::Possibly, {std::move(f)}); }

Formula Formula::necessarily(Formula f) { return Formula(Kind::Necessarily, {std::move(f)}); }

bool Formula::modal_free() const { return modal_depth() == 0; }

int Formula::modal_depth() const {
    int depth = 0;
    for (const Formula& k : kids_) depth = std::max(depth, k.modal_depth());
    if (kind_ == Kind::Possibly || kind_ == Kind::Necessarily) depth += 1;
    return depth;
}

void Formula::collect_atoms(std::set<AtomId>& out) const {
    if (kind_ == Kind::Lit) {
        out.insert(lit_.atom);
        return;
    }
    for (const Formula& k : kids_) k.collect_atoms(out);
}

std::set<AtomId> Formula::atoms() const {
    std::set<AtomId> out;
    collect_atoms(out);
    return out;
}

bool Formula::as_literal_conjunction(std::vector<Literal>& out) const {
    if (kind_ == Kind::Lit) {
        out.push_back(lit_);
        return true;
    }
    if (kind_ != Kind::And) return false;
    for (const Formula& k : kids_) {
        if (!k.is_literal()) return false;
        out.push_back(k.literal());
    }
    return true;
}

int Formula::compare(const Formula& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_ ? -1 : 1;
    if (kind_ == Kind::Lit) {
        if (lit_ == other.lit_) return 0;
        return lit_ < other.lit_ ? -1 : 1;
    }
    const std::size_t n = std::min(kids_.size(), other.kids_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = kids_[i].compare(other.kids_[i]);
        if (c != 0) return c;
    }
    if (kids_.size() == other.kids_.size()) return 0;
    return kids_.size() < other.kids_.size() ? -1 : 1;
}

Formula Formula::remap(const std::vector<AtomId>& id_map) const {
    if (kind_ == Kind::Lit) return lit(Literal(id_map[lit_.atom], lit_.negative));
    std::vector<Formula> kids;
    kids.reserve(kids_.size());
    for (const Formula& k : kids_) kids.push_back(k.remap(id_map));
    Formula f(kind_, std::move(kids));
    return f;
}

Formula canonical(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Lit:
            return f;
        case Formula::Kind::Not: {
            Formula c = canonical(f.child(0));
            if (c.kind() == Formula::Kind::Lit) return Formula::lit(c.literal().negated());
            if (c.kind() == Formula::Kind::Not) return c.child(0);
            return Formula::negation(std::move(c));
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<Formula> kids;
            for (const Formula& k : f.children()) {
                Formula c = canonical(k);
                if (c.kind() == f.kind()) {
                    for (const Formula& g : c.children()) kids.push_back(g);
                } else {
                    kids.push_back(std::move(c));
                }
            }
            std::sort(kids.begin(), kids.end());
            kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
            return f.kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                                  : Formula::disj(std::move(kids));
        }
        case Formula::Kind::Implies:
            return Formula::implies(canonical(f.child(0)), canonical(f.child(1)));
        case Formula::Kind::Possibly:
            return Formula::possibly(canonical(f.child(0)));
        case Formula::Kind::Necessarily:
            return Formula::necessarily(canonical(f.child(0)));
    }
    return f;  // unreachable
}

}  // namespace mik
