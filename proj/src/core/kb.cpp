// Copyright 2026 The Mik Authors
// Licensed under the Apache License, Version 2.0.

#include "mik/core/kb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mik {

AtomId KbDraft::intern(std::string_view name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<AtomId>(i);
    names.emplace_back(name);
    return static_cast<AtomId>(names.size() - 1);
}

std::optional<AtomId> KbDraft::lookup(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<AtomId>(i);
    return std::nullopt;
}

std::size_t KbDraft::atom_count() const {
    std::size_t n = 0;
    for (const Statement& s : statements)
        if (const auto* d = std::get_if<AtomDecl>(&s)) n += d->names.size();
    return n;
}

std::size_t KbDraft::constraint_count() const {
    std::size_t n = 0;
    for (const Statement& s : statements)
        if (std::holds_alternative<ConstraintDecl>(s)) ++n;
    return n;
}

std::size_t KbDraft::rule_count() const {
    std::size_t n = 0;
    for (const Statement& s : statements)
        if (std::holds_alternative<RuleDecl>(s)) ++n;
    return n;
}

std::size_t KbDraft::rule_count(RuleKind k) const {
    std::size_t n = 0;
    for (const Statement& s : statements)
        if (const auto* r = std::get_if<RuleDecl>(&s))
            if (r->kind == k) ++n;
    return n;
}

std::vector<Literal> IncompatibilityConstraint::sorted_members() const {
    std::vector<Literal> m = members;
    std::sort(m.begin(), m.end());
    return m;
}

std::optional<AtomId> KnowledgeBase::atom_id(std::string_view name) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
    if (it != atoms_.end() && *it == name)
        return static_cast<AtomId>(it - atoms_.begin());
    return std::nullopt;
}

std::size_t KnowledgeBase::declared_constraint_count() const {
    std::size_t n = 0;
    for (const auto& c : constraints_)
        if (c.declared) ++n;
    return n;
}

const Rule* KnowledgeBase::rule_by_label(std::string_view label) const {
    for (const Rule& r : rules_)
        if (r.label == label) return &r;
    return nullptr;
}

std::size_t KnowledgeBase::rule_count(RuleKind k) const {
    std::size_t n = 0;
    for (const Rule& r : rules_)
        if (r.kind == k) ++n;
    return n;
}

bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    if (a.atoms_ != b.atoms_) return false;
    auto declared_set = [](const KnowledgeBase& kb) {
        std::set<std::vector<Literal>> s;
        for (const auto& c : kb.constraints_)
            if (c.declared) s.insert(c.sorted_members());
        return s;
    };
    if (declared_set(a) != declared_set(b)) return false;
    if (a.rules_.size() != b.rules_.size()) return false;
    for (std::size_t i = 0; i < a.rules_.size(); ++i) {
        const Rule& x = a.rules_[i];
        const Rule& y = b.rules_[i];
        if (x.kind != y.kind || x.label != y.label || x.antecedent != y.antecedent ||
            x.consequent != y.consequent)
            return false;
    }
    return true;
}

namespace {

// Modal rule antecedents may be phi or exactly poss(phi); everything else
// stays strictly modal-free.
bool valid_modal_antecedent(const Formula& f) {
    if (f.kind() == Formula::Kind::Possibly) return f.child(0).modal_free();
    return f.modal_free();
}

bool valid_modal_consequent(const Formula& f) {
    return f.kind() == Formula::Kind::Possibly && f.child(0).modal_free();
}

}  // namespace

struct KbBuilder {
    static BuildResult run(const KbDraft& draft, std::uint64_t base_revision) {
        std::vector<ValidationError> errors;
        auto err = [&errors](std::string msg, const lang::Span& span) {
            errors.push_back(ValidationError{std::move(msg), span});
        };

        // Declared atoms, in declaration order, duplicates rejected.
        std::vector<std::string> declared;
        for (const Statement& s : draft.statements) {
            const auto* d = std::get_if<AtomDecl>(&s);
            if (!d) continue;
            for (const std::string& name : d->names) {
                if (std::find(declared.begin(), declared.end(), name) != declared.end())
                    err("duplicate atom declaration: " + name, d->span);
                else
                    declared.push_back(name);
            }
        }

        KnowledgeBase kb;
        kb.revision_ = base_revision + 1;
        kb.atoms_ = declared;
        std::sort(kb.atoms_.begin(), kb.atoms_.end());

        // Draft id -> final (sorted) id; kInvalid marks undeclared names.
        constexpr AtomId kInvalid = static_cast<AtomId>(-1);
        std::vector<AtomId> id_map(draft.names.size(), kInvalid);
        for (std::size_t i = 0; i < draft.names.size(); ++i)
            if (auto id = kb.atom_id(draft.names[i])) id_map[i] = *id;

        auto check_declared = [&](const Formula& f, const lang::Span& span) {
            bool ok = true;
            for (AtomId a : f.atoms()) {
                if (id_map[a] == kInvalid) {
                    err("undeclared atom: " + draft.names[a], span);
                    ok = false;
                }
            }
            return ok;
        };

        std::set<std::vector<Literal>> constraint_keys;
        auto push_constraint = [&](IncompatibilityConstraint c) {
            if (constraint_keys.insert(c.sorted_members()).second)
                kb.constraints_.push_back(std::move(c));
        };

        std::size_t rule_position = 0;
        std::set<std::string> labels;
        std::vector<IncompatibilityConstraint> desugared;

        for (const Statement& s : draft.statements) {
            if (const auto* c = std::get_if<ConstraintDecl>(&s)) {
                std::vector<Literal> members;
                bool ok = true;
                for (Literal l : c->members) {
                    if (id_map[l.atom] == kInvalid) {
                        err("undeclared atom: " + draft.names[l.atom], c->span);
                        ok = false;
                        continue;
                    }
                    Literal mapped(id_map[l.atom], l.negative);
                    if (std::find(members.begin(), members.end(), mapped) == members.end())
                        members.push_back(mapped);
                }
                if (!ok) continue;
                bool vacuous = false;
                for (Literal l : members)
                    if (std::find(members.begin(), members.end(), l.negated()) != members.end())
                        vacuous = true;
                if (vacuous) {
                    err("vacuous constraint: contains a literal and its negation", c->span);
                    continue;
                }
                if (members.size() < 2) {
                    err("constraint of arity < 2", c->span);
                    continue;
                }
                push_constraint(IncompatibilityConstraint{std::move(members), true, ""});
            } else if (const auto* r = std::get_if<RuleDecl>(&s)) {
                ++rule_position;
                std::string label =
                    r->label.empty() ? "r" + std::to_string(rule_position) : r->label;
                if (!labels.insert(label).second) {
                    err("duplicate rule label: " + label, r->span);
                    continue;
                }
                if (!check_declared(r->antecedent, r->span) ||
                    !check_declared(r->consequent, r->span))
                    continue;
                Formula ant = r->antecedent.remap(id_map);
                Formula cons = r->consequent.remap(id_map);

                if (r->kind == RuleKind::Modal) {
                    if (!valid_modal_antecedent(ant)) {
                        err("modal rule antecedent must be modal-free or a single poss(...)",
                            r->span);
                        continue;
                    }
                    if (!valid_modal_consequent(cons)) {
                        err("modal rule consequent must be poss(...) over a modal-free formula",
                            r->span);
                        continue;
                    }
                    kb.rules_.push_back(Rule{r->kind, label, std::move(ant), std::move(cons)});
                    continue;
                }

                const char* kind_word = r->kind == RuleKind::Strict ? "strict" : "defeasible";
                if (!ant.modal_free()) {
                    err(std::string("modal operator in the antecedent of a ") + kind_word +
                            " rule",
                        r->span);
                    continue;
                }
                std::vector<Literal> cons_lits;
                if (!cons.as_literal_conjunction(&cons_lits ? cons_lits : cons_lits) ||
                    cons_lits.empty()) {
                    err(std::string(kind_word) +
                            " rule consequent must be a conjunction of literals",
                        r->span);
                    continue;
                }
                if (r->kind == RuleKind::Defeasible) {
                    kb.rules_.push_back(Rule{r->kind, label, std::move(ant), std::move(cons)});
                    continue;
                }

                std::vector<Literal> ant_lits;
                if (!ant.as_literal_conjunction(ant_lits) || ant_lits.empty()) {
                    err("strict rule antecedent must be a conjunction of literals", r->span);
                    continue;
                }
                // Desugar: one constraint {antecedent-literals, !conjunct} per
                // consequent conjunct. A set holding both polarities of an
                // atom can never fire (tautological conjunct) and is skipped.
                bool rule_ok = true;
                std::vector<IncompatibilityConstraint> rule_constraints;
                for (Literal q : cons_lits) {
                    std::vector<Literal> members;
                    for (Literal l : ant_lits)
                        if (std::find(members.begin(), members.end(), l) == members.end())
                            members.push_back(l);
                    Literal neg = q.negated();
                    if (std::find(members.begin(), members.end(), neg) == members.end())
                        members.push_back(neg);
                    bool tautological = false;
                    for (Literal l : members)
                        if (std::find(members.begin(), members.end(), l.negated()) !=
                            members.end())
                            tautological = true;
                    if (tautological) continue;
                    if (members.size() < 2) {
                        err("strict rule '" + label + "' desugars to a constraint of arity < 2",
                            r->span);
                        rule_ok = false;
                        break;
                    }
                    rule_constraints.push_back(
                        IncompatibilityConstraint{std::move(members), false, label});
                }
                if (!rule_ok) continue;
                for (auto& c2 : rule_constraints) desugared.push_back(std::move(c2));
                kb.rules_.push_back(Rule{r->kind, label, std::move(ant), std::move(cons)});
            }
        }

        for (auto& c : desugared) push_constraint(std::move(c));

        if (!errors.empty()) return BuildResult{std::nullopt, std::move(errors)};
        return BuildResult{std::move(kb), {}};
    }
};

BuildResult build_kb(const KbDraft& draft) { return KbBuilder::run(draft, 0); }

KbDraft to_draft(const KnowledgeBase& kb) {
    KbDraft draft;
    for (const std::string& name : kb.atom_names()) draft.intern(name);
    if (!kb.atom_names().empty())
        draft.statements.push_back(AtomDecl{kb.atom_names(), {}});
    for (const auto& c : kb.constraints())
        if (c.declared) draft.statements.push_back(ConstraintDecl{c.members, {}});
    for (const Rule& r : kb.rules())
        draft.statements.push_back(RuleDecl{r.kind, r.label, r.antecedent, r.consequent, {}});
    return draft;
}

BuildResult add_statement(const KnowledgeBase& kb, const KbDraft& additions) {
    KbDraft merged = to_draft(kb);
    std::vector<AtomId> id_map(additions.names.size());
    for (std::size_t i = 0; i < additions.names.size(); ++i)
        id_map[i] = merged.intern(additions.names[i]);
    for (const Statement& s : additions.statements) {
        if (const auto* d = std::get_if<AtomDecl>(&s)) {
            merged.statements.push_back(*d);
        } else if (const auto* c = std::get_if<ConstraintDecl>(&s)) {
            ConstraintDecl mapped = *c;
            for (Literal& l : mapped.members) l.atom = id_map[l.atom];
            merged.statements.push_back(std::move(mapped));
        } else if (const auto* r = std::get_if<RuleDecl>(&s)) {
            RuleDecl mapped = *r;
            mapped.antecedent = r->antecedent.remap(id_map);
            mapped.consequent = r->consequent.remap(id_map);
            merged.statements.push_back(std::move(mapped));
        }
    }
    return KbBuilder::run(merged, kb.revision());
}

Formula resolve(const KnowledgeBase& kb, const Formula& f,
                const std::vector<std::string>& names) {
    std::vector<AtomId> id_map(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto id = kb.atom_id(names[i]);
        if (!id) throw UndeclaredAtom(names[i]);
        id_map[i] = *id;
    }
    return f.remap(id_map);
}

std::optional<Literal> as_literal(const Formula& f) {
    if (f.is_literal()) return f.literal();
    return std::nullopt;
}

}  // namespace mik
