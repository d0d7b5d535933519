#include "hopfkit/error.hpp"

namespace hopfkit
{

const char *errc_name(Errc code)
{
  switch (code)
  {
  case Errc::eps_overflow: return "EpsOverflow";
  case Errc::mixed_truncation: return "MixedTruncation";
  case Errc::not_divisible: return "NotDivisible";
  case Errc::singular_limit: return "SingularLimit";
  case Errc::non_nilpotent_argument: return "NonNilpotentArgument";
  case Errc::not_invertible: return "NotInvertible";
  case Errc::degree_cap_exceeded: return "DegreeCapExceeded";
  case Errc::fuel_exhausted: return "FuelExhausted";
  case Errc::slot_mismatch: return "SlotMismatch";
  case Errc::malformed_relation: return "MalformedRelation";
  case Errc::parse_error: return "ParseError";
  case Errc::unknown_symbol: return "UnknownSymbol";
  case Errc::validation_error: return "ValidationError";
  case Errc::unknown_name: return "UnknownName";
  case Errc::no_hopf_data: return "NoHopfData";
  case Errc::not_closed: return "NotClosed";
  case Errc::usage: return "UsageError";
  }
  return "Error";
}

} // namespace hopfkit
