// report.h --- text and JSON renderings of evaluation reports.

#ifndef HMMTAG_REPORT_H_
#define HMMTAG_REPORT_H_

#include <string>

#include "hmmtag/eval.h"
#include "json.hpp"

namespace hmmtag {

std::string RenderText(const EvalReport &report, bool color = false);
std::string RenderText(const CvReport &cv, bool color = false);

nlohmann::json ToJson(const EvalReport &report);
nlohmann::json ToJson(const CvReport &cv);

}  // namespace hmmtag

#endif  // HMMTAG_REPORT_H_
