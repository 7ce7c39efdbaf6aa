#pragma once

#include <span>
#include <vector>

#include "implicitus/ingest.hpp"
#include "implicitus/model.hpp"

namespace implicitus {

/// Implicit declarations of one module, ordered by (path, range, id).
std::vector<Declaration> extract_implicit_declarations(const ModuleId& module, const SymbolTable& table);

/// Rebuilds implicit call sites from raw synthetic trees.
///
/// Trees are processed per compilation unit (module, path). An `apply` over
/// original code whose arguments are all injected becomes a call site whose
/// callee and type arguments come from the select/typeapply synthetic over
/// the function part of the same call. An `apply` of an injected function to
/// a single original expression becomes a whole-call (conversion) site;
/// injected arguments applied on top of it are its implicit arguments.
/// Injected applications nested in argument position are folded into Call
/// nodes. Synthetics without injected arguments are dropped.
///
/// Throws InconsistencyError when a tree references a symbol the table does
/// not know or when the callee of an injected application cannot be found.
std::vector<CallSite> callsites_from_synthetics(std::span<const SyntheticRecord> records, const SymbolTable& table);

/// link_symbols followed by synthetic extraction: the resulting corpus holds
/// explicit and reconstructed call sites (deduplicated, canonical order)
/// with unresolved modules flagged.
Corpus assemble_corpus(const std::vector<ParsedFacts>& fragments);

}  // namespace implicitus
