#pragma once

#include <json.hpp>

#include "infoq/channels.hpp"
#include "infoq/complexity.hpp"
#include "infoq/joint.hpp"
#include "infoq/measure.hpp"
#include "infoq/reduction_sim.hpp"
#include "infoq/simple_approx.hpp"
#include "infoq/zoo.hpp"

namespace infoq {

using Json = nlohmann::ordered_json;

/// A double rounded to 12 significant digits; infinities become "inf" /
/// "-inf" and NaN becomes null.
Json number(double v);

Json to_json(const ExtendedReal& v);  // undefined -> null
Json to_json(const InfoValue& v);
Json to_json(const Label& label);
Json to_json(const Distribution& d);
Json to_json(const JointModel& j);
Json to_json(const EntropySequence& s);
Json to_json(const ComplexityReport& r);
Json to_json(const MarkovBound& m);
Json to_json(const SatTrialsBound& b);
Json to_json(const IdealEngineCheck& c);
Json to_json(const ModProfile& p);
Json to_json(const BoolProfile& p);
Json to_json(const TotientProfile& p);
Json to_json(const DiscreteLogProfile& p);
Json to_json(const RabinProfile& p);
Json to_json(const RsaProfile& p);
Json to_json(const MultiplicationProfile& p);
Json to_json(const SubsetSumProfile& p, bool with_histogram);
Json to_json(const BinaryChannel& c);
Json to_json(const BppAnalysis& a);
Json to_json(const PpAnalysis& a);
Json to_json(const ErrorThreshold& t);
Json to_json(const QueryTrace& t);
Json to_json(const GeometricResult& g);
Json to_json(const AmplificationResult& a);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace infoq
