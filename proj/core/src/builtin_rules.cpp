// Copyright 2026 The ctilint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctilint/registry.hpp"

namespace ctilint {

namespace {

StandardDescriptor standard(const char* id, const char* name,
                            StandardCategory category,
                            const char* description) {
  StandardDescriptor descriptor;
  descriptor.id = id;
  descriptor.name = name;
  descriptor.category = category;
  descriptor.description = description;
  return descriptor;
}

FieldRule rule(const char* standard_id, const char* pattern,
               LeakCategory category) {
  FieldRule field_rule;
  field_rule.standard_id = standard_id;
  field_rule.pattern = pattern;
  field_rule.category = category;
  return field_rule;
}

Registry build() {
  constexpr auto kEnum = StandardCategory::kEnumeration;
  constexpr auto kScore = StandardCategory::kScoringSystem;
  constexpr auto kLang = StandardCategory::kLanguage;
  constexpr auto kTransport = StandardCategory::kTransport;
  constexpr auto kPii = LeakCategory::kPii;
  constexpr auto kSensitive = LeakCategory::kSensitive;
  constexpr auto kInference = LeakCategory::kInference;

  Registry registry;
  registry.standards = {
      standard("cve", "Common Vulnerabilities and Exposures", kEnum,
               "Identifiers for publicly disclosed cybersecurity "
               "vulnerabilities."),
      standard("cwe", "Common Weakness Enumeration", kEnum,
               "Classification of software and hardware weakness types."),
      standard("capec", "Common Attack Pattern Enumeration and Classification",
               kEnum, "Catalog of known attack patterns."),
      standard("cce", "Common Configuration Enumeration", kEnum,
               "Identifiers for system configuration issues."),
      standard("cpe", "Common Platform Enumeration", kEnum,
               "Structured names for IT platforms, products, and vendors."),
      standard("cvss", "Common Vulnerability Scoring System", kScore,
               "Numerical severity scores for vulnerabilities."),
      standard("cwss", "Common Weakness Scoring System", kScore,
               "Numerical risk scores for software weaknesses."),
      standard("maec", "Malware Attribute Enumeration and Characterization",
               kLang,
               "Language for encoding malware behavior and analysis results."),
      standard("oval", "Open Vulnerability and Assessment Language", kLang,
               "Language for machine-state assertions and assessment "
               "results."),
      standard("iodef", "Incident Object Description Exchange Format", kLang,
               "Format for exchanging computer security incident reports."),
      standard("xccdf",
               "Extensible Configuration Checklist Description Format", kLang,
               "Language for security checklists, benchmarks, and test "
               "results."),
      standard("stix", "Structured Threat Information eXpression", kLang,
               "Language for structured cyber threat information."),
      standard("cee", "Common Event Expression", kLang,
               "Unified structure for expressing and sharing event log "
               "records."),
      standard("cybox", "Cyber Observable eXpression", kLang,
               "Language for describing observable events and properties."),
      standard("rid", "Real-time Inter-network Defense", kTransport,
               "Transport for coordinating incident handling between "
               "networks."),
      standard("taxii", "Trusted Automated eXchange of Indicator Information",
               kTransport,
               "Protocols for exchanging threat information between "
               "parties."),
      standard("soap", "Simple Object Access Protocol", kTransport,
               "XML messaging framework used by assessment and reporting "
               "services."),
      standard("repute", "Reputation Query Services (Repute, DKIM)",
               kTransport,
               "Query services for reputation data about message "
               "authentication identities."),
  };

  // The declared CybOX score disagrees with both its prose restatement (56)
  // and the sum of the transcribed rules (68); the declared value is kept as
  // metadata and the row is flagged rather than silently reconciled.
  for (StandardDescriptor& descriptor : registry.standards) {
    if (descriptor.id == "cybox") {
      descriptor.flags.push_back("inconsistent-source");
      descriptor.declared_score = 65;
      descriptor.score_note =
          "Declared score 65 disagrees with the accompanying prose (56) and "
          "with the sum of the transcribed field rules (68); the declared "
          "value is kept and the row is flagged.";
    }
  }

  registry.rules = {
      rule("cve", "CVE-ID", kInference),

      rule("cwe", "CWE-ID", kInference),

      rule("capec", "Submission/Source", kSensitive),
      rule("capec", "Submission/Organization", kSensitive),
      rule("capec", "Submission/Date", kSensitive),
      rule("capec", "Relationship/ViewID", kInference),
      rule("capec", "Relationship/TargetForm", kInference),
      rule("capec", "Relationship/Nature", kInference),
      rule("capec", "Relationship/TargetID", kInference),

      rule("cce", "modified_reference", kSensitive),
      rule("cce", "cce_id", kInference),
      rule("cce", "platform", kInference),

      rule("cpe", "title", kSensitive),
      rule("cpe", "platform_id", kInference),

      rule("oval", "contributor", kPii),
      rule("oval", "timestamp", kSensitive),
      rule("oval", "submitted/@date", kSensitive),
      rule("oval", "status_change", kSensitive),
      rule("oval", "affected/@family", kSensitive),
      rule("oval", "platform", kSensitive),
      rule("oval", "title", kSensitive),
      rule("oval", "description", kSensitive),
      rule("oval", "definition", kInference),
      rule("oval", "reference", kInference),

      rule("xccdf", "Benchmark/metadata", kPii),
      rule("xccdf", "TestResult/identity", kPii),
      rule("xccdf", "platform-specification", kSensitive),
      // platform occurs at two levels with different categories; the
      // benchmark-scoped pattern keeps (standard, pattern) unique.
      rule("xccdf", "Benchmark/platform", kSensitive),
      rule("xccdf", "status", kSensitive),
      rule("xccdf", "TestResult/organization", kSensitive),
      rule("xccdf", "TestResult/profile", kSensitive),
      rule("xccdf", "TestResult/target", kSensitive),
      rule("xccdf", "TestResult/target-address", kSensitive),
      rule("xccdf", "TestResult/target-facts", kSensitive),
      rule("xccdf", "TestResult/target-id-ref", kSensitive),
      rule("xccdf", "TestResult/start-time", kSensitive),
      rule("xccdf", "TestResult/end-time", kSensitive),
      rule("xccdf", "TestResult/fact", kSensitive),
      rule("xccdf", "affected/@family", kInference),
      rule("xccdf", "platform", kInference),
      rule("xccdf", "benchmarkIdType", kInference),
      rule("xccdf", "@resolved", kInference),
      rule("xccdf", "identity/@authenticated", kInference),
      // "priviledged" is the spelling the source data uses.
      rule("xccdf", "identity/@priviledged", kInference),

      rule("maec", "Comment/@author", kPii),
      rule("maec", "Raw_Artifact", kSensitive),
      rule("maec", "Configuration_Parameter", kSensitive),
      rule("maec", "Name", kSensitive),
      rule("maec", "Value", kSensitive),
      rule("maec", "Collections/@timestamp", kSensitive),
      rule("maec", "Analysis/@start_datetime", kSensitive),
      rule("maec", "Analysis/@complete_datetime", kSensitive),
      rule("maec", "Analysis/@lastupdate_datetime", kSensitive),
      rule("maec", "Analysis/Comments", kSensitive),
      rule("maec", "Comment/@timestamp", kSensitive),
      rule("maec", "Action", kInference),
      rule("maec", "CVE", kInference),

      rule("cee", "time", kSensitive),
      rule("cee", "host", kSensitive),
      rule("cee", "dst", kSensitive),
      rule("cee", "ipv4", kSensitive),
      rule("cee", "ipv6", kSensitive),
      rule("cee", "src", kSensitive),
      rule("cee", "port", kSensitive),
      rule("cee", "status", kInference),

      rule("iodef", "Contact", kPii),
      rule("iodef", "IncidentSource", kPii),
      rule("iodef", "DetectTime", kSensitive),
      rule("iodef", "StartTime", kSensitive),
      rule("iodef", "EndTime", kSensitive),
      rule("iodef", "ReportTime", kSensitive),
      rule("iodef", "Assessment", kInference),
      rule("iodef", "IncidentID", kInference),
      rule("iodef", "AlternativeID", kInference),

      rule("stix", "Identity", kPii),
      rule("stix", "Specification", kPii),
      rule("stix", "PersonName", kPii),
      rule("stix", "Name", kPii),
      rule("stix", "Address", kPii),
      rule("stix", "ElectronicAddressIdentifier", kPii),
      rule("stix", "ContactNumber", kPii),
      rule("stix", "@timestamp", kSensitive),
      rule("stix", "OrganizationInfo", kSensitive),
      rule("stix", "OrganisationName", kSensitive),
      rule("stix", "Nationalities/Country/NameElement", kSensitive),

      rule("cybox", "Recipient", kPii),
      rule("cybox", "From", kPii),
      rule("cybox", "Address_Value", kPii),
      rule("cybox", "Raw_Header", kPii),
      rule("cybox", "Contributors", kPii),
      rule("cybox", "Contributor/Role", kPii),
      rule("cybox", "Contributor/Name", kPii),
      rule("cybox", "Contributor/Email", kPii),
      rule("cybox", "Contributor/Phone", kPii),
      // Two distinct Value fields (HTTP session and URI objects) keep an
      // object segment so the patterns stay unique.
      rule("cybox", "HTTPSession/Value", kSensitive),
      rule("cybox", "URI/Value", kSensitive),
      rule("cybox", "Port_Value", kSensitive),
      rule("cybox", "Raw_Artifact", kSensitive),
      rule("cybox", "Date", kSensitive),
      rule("cybox", "Subject", kSensitive),
      rule("cybox", "Issuer", kSensitive),
      rule("cybox", "Start_Time", kSensitive),
      rule("cybox", "End_Time", kSensitive),
      rule("cybox", "Produced_Time", kSensitive),
      rule("cybox", "Received_Time", kSensitive),
      rule("cybox", "Observation_Location", kSensitive),
      rule("cybox", "Observable_Location", kSensitive),
      rule("cybox", "Contributor/Organization", kSensitive),
      rule("cybox", "Contributor/Date", kSensitive),
      rule("cybox", "Contributor/Contribution_Location", kSensitive),
  };

  return registry;
}

}  // namespace

const Registry& builtin_registry() {
  static const Registry registry = build();
  return registry;
}

}  // namespace ctilint
