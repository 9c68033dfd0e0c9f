#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fundcast/time_util.hpp"

namespace fundcast {

enum class Gender { kMale, kFemale, kUnknown };

const char* to_string(Gender g);
std::optional<Gender> gender_from_string(const std::string& s);

enum class Relationship {
  kRelative,
  kFriend,
  kColleague,
  kClassmate,
  kNeighbor,
  kOther
};

constexpr int kRelationshipCount = 6;
const char* to_string(Relationship r);
std::optional<Relationship> relationship_from_string(const std::string& s);

struct CaseProfile {
  std::string case_id;
  int fundraiser_age = 0;
  Gender gender = Gender::kUnknown;
  double target_amount = 0.0;    // CNY, > 0
  double obtained_amount = 0.0;  // CNY, >= 0
  std::string domicile_province;
  std::string hospital_province;
  std::string title;
  std::string content;
  Timestamp start_time = 0;
  Timestamp end_time = 0;
};

struct ShareEvent {
  std::string user_id;
  std::optional<std::string> source_id;  // absent: exposure via the platform
  Timestamp time = 0;
  std::string case_id;
  std::string channel;
};

struct DonateEvent {
  std::string user_id;
  std::string case_id;
  double amount = 0.0;  // CNY, > 0
  Timestamp time = 0;
};

struct VerifyEvent {
  std::string user_id;
  std::string case_id;
  Timestamp time = 0;
  Relationship relationship = Relationship::kOther;
};

// One case plus its activity, event lists sorted ascending by time
// (ties keep input order). Immutable after construction by convention.
struct CampaignRecord {
  CaseProfile profile;
  std::vector<ShareEvent> shares;
  std::vector<DonateEvent> donations;
  std::vector<VerifyEvent> verifications;
};

struct ValidityVerdict {
  bool valid = true;
  std::string reason;  // first failing reason when invalid
};

// Invalid iff the fundraising period exceeds 30 days or any type
// invariant fails. The 30-day boundary is inclusive: period == 30 days
// is still valid.
ValidityVerdict validate_campaign(const CampaignRecord& record);

// Copy of `record` keeping exactly the events with offset in [0, T)
// from start_time. Throws std::invalid_argument when T <= 0.
CampaignRecord truncate_window(const CampaignRecord& record, Duration T);

}  // namespace fundcast
