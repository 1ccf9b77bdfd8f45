#include "casekit/assessment.hpp"

#include "casekit/errors.hpp"

namespace casekit {

namespace {

// Claim-support rubric cells, [dimension][level]. Paragraphs separated by a blank line.
constexpr std::string_view kGuidance[2][4] = {
    {
        R"cell(Documentation on processes/ procedures has not been provided for any aspects of claim.

[Procedural evidence may not have been provided, or may be irrelevant to the satisfaction of the claim.]

No governance or oversight has been provided for any meaningful aspect of the claim.)cell",
        R"cell(Documentation on processes/procedures has only been provided for certain portions of the claim and/or is inapplicable to critical aspects of the claim.

Little or no oversight of processes/procedures has been provided for critical aspects of the claim (for example: reliance on individual or small teams efforts for process design without an approved policy or design document).)cell",
        R"cell(Documentation on processes/procedures addresses core aspects of the claim, but may necessitate further clarity or detail.

Oversight and governance is established, with design aspects and/or procedural decisions under the oversight of key stakeholders at Director level or higher (or clearly defined delegate).)cell",
        R"cell(Clear and complete documentation on processes/procedures is sufficient and is directly applicable to all aspects of the claim.

Oversight and governance is established, with design aspects and/or procedural decisions clearly aligned with broader company programs and goals (e.g., codified in company-level Objectives and Key Results (OKRs) or Product Requirement Documents (PRDs).)cell",
    },
    {
        R"cell(Evidence of implementing any parts of the processes/ procedures above has not been provided.

When a process is not specified or required*, evidence of results or metrics relevant for any aspects of the claim is not available.

[Implementation evidence may not be attached, or may be irrelevant to the satisfaction of the claim.])cell",
        R"cell(Evidence of implementation of processes/procedures is sufficient for some, but not all critical aspects of the claim [it may not have been provided or may be irrelevant].

Process implementation is ad-hoc, dependent on individual effort, and/or not consistent with documentation provided.

When a process is not specified or required*, execution metrics and/or overall results may not support critical aspects of the claim.)cell",
        R"cell(Evidence of implementation of processes/procedures addresses core aspects of the claim, with applicable metrics and results that adequately support the claim.

Process implementation may demonstrate minor inconsistencies or known departures that are not always documented. When a process is not specified or required*, execution metrics and/or overall results still address core aspects of the claim.)cell",
        R"cell(Evidence of implementation consistently and appropriately follows processes/procedures documentation, covering all aspects of the claim. Uniform tracking of non-conformities is available and well documented.

Process implementation demonstrates a deliberate allocation of resources to focus on process optimization & improvement. Applicable metrics are aligned to company goals with tracked progress and trends toward continual improvement.)cell",
    },
};

constexpr std::string_view kTitles[4] = {"Insufficient Support", "Initial Support", "Adequate Support",
                                         "Strong Support"};

}  // namespace

RubricCell rubric_text(Dimension dimension, int level) {
    if (level < 0 || level > 3) {
        throw Error("LEVEL_OUT_OF_RANGE", std::to_string(level), "rubric level must be within 0..3");
    }
    const auto d = static_cast<std::size_t>(dimension);
    return {dimension, level, std::string(kTitles[level]), std::string(kGuidance[d][level])};
}

}  // namespace casekit
