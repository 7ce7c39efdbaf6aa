#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "implicitus/config.hpp"
#include "implicitus/errors.hpp"
#include "implicitus/model.hpp"

namespace implicitus {

/// An implicit definition the compiler may apply to turn a `source` value
/// into a `target` one.
struct Conversion {
  SymbolId decl;
  TypeRef source;
  TypeRef target;
  bool viaFunctionValue = false;  // implicit val/object of function type
  bool conditional = false;       // takes implicit parameters
  bool fromImplicitClass = false;

  bool operator==(const Conversion&) const = default;
};

enum class ConversionKind { LateTrait, ExtensionMethod, Plain };
enum class CallSiteIdiom { TypeClass, TypeProof, Context };

/// Every label the classifier can attach to a declaration or call site.
enum class Idiom {
  LateTrait,
  ExtensionMethod,
  TypeClass,
  ExtensionSyntax,
  TypeProof,
  Context,
  UnrelatedConversion,
  BidirectionalConversion,
};

inline constexpr Idiom kAllIdioms[] = {
    Idiom::LateTrait, Idiom::ExtensionMethod,     Idiom::TypeClass,           Idiom::ExtensionSyntax,
    Idiom::TypeProof, Idiom::Context,             Idiom::UnrelatedConversion, Idiom::BidirectionalConversion,
};

std::string_view to_string(ConversionKind k);
std::string_view to_string(CallSiteIdiom i);
std::string_view to_string(Idiom i);
std::optional<ConversionKind> parse_conversion_kind(std::string_view s);
std::optional<CallSiteIdiom> parse_callsite_idiom(std::string_view s);
std::optional<Idiom> parse_idiom(std::string_view s);

Idiom as_idiom(CallSiteIdiom i);
std::optional<Idiom> as_idiom(ConversionKind k);  // none for PLAIN

/// Raised by classify_callsite when the callee has no declaration.
class UnresolvedCallee : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

/// Conversion view of an implicit declaration: an implicit def with exactly
/// one explicit parameter (plus an optional implicit list) and a non-unit
/// result, or an implicit val/var/object whose type conforms to the
/// one-argument function type.
std::optional<Conversion> conversion_of(const Declaration& decl, const SymbolTable& table, const RulesConfig& config);

ConversionKind classify_conversion(const Conversion& conv, const SymbolTable& table);

/// Type parameters in scope of a declaration: its own followed by those of
/// every enclosing type or method in the table.
std::vector<SymbolId> enclosing_type_params(const Declaration& decl, const SymbolTable& table);

/// A parameter type with some type argument, at any depth, headed by one of
/// `enclosing`. A bare type parameter does not count.
bool is_type_class_param(const TypeRef& paramType, std::span<const SymbolId> enclosing);

/// A parameter type headed by a configured constraint. For the function type
/// both type arguments must mention an enclosing type parameter.
bool is_constraint_param(const TypeRef& paramType, std::span<const SymbolId> enclosing, const RulesConfig& config);

bool is_extension_syntax(const Conversion& conv, const Declaration& decl, const SymbolTable& table);

bool is_type_proof(const Declaration& decl, const SymbolTable& table, const RulesConfig& config);

/// Label of an implicit call site, by the parameters its injected arguments
/// fill: TYPE_PROOF over TYPE_CLASS over CONTEXT. Throws UnresolvedCallee.
CallSiteIdiom classify_callsite(const CallSite& cs, const SymbolTable& table, const RulesConfig& config);

/// Public, not block-local, and declared in a unit that holds neither the
/// source nor the target type.
bool is_unrelated(const Conversion& conv, const Declaration& decl, const SymbolTable& table);

/// Grouping key for bidirectional pairs: the artifact of a conversion.
using ArtifactKeyFn = std::function<std::pair<std::string, std::string>(const SymbolId&)>;

/// Conversions A->B and B->A (heads only) declared in the same artifact.
/// Each pair is reported once as (smaller id, larger id); the result is
/// sorted.
std::vector<std::pair<SymbolId, SymbolId>> bidirectional_pairs(std::span<const Conversion> convs,
                                                                const ArtifactKeyFn& artifactOf);

}  // namespace implicitus
