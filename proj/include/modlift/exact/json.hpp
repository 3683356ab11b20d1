#pragma once

#include "modlift/exact/example.hpp"
#include "modlift/exact/remark.hpp"
#include "modlift/io.hpp"

namespace modlift::exact {

io::Json to_json(const Certificate& c);
io::Json to_json(const UnitReport& r);
io::Json to_json(const ExactReport& r);
io::Json to_json(const NonlocalWitness& w);
io::Json to_json(const FiepVerdict& v);
io::Json to_json(const RemarkResult& r);

}  // namespace modlift::exact
