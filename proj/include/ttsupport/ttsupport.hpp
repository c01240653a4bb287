#ifndef TTSUPPORT_TTSUPPORT_HPP
#define TTSUPPORT_TTSUPPORT_HPP

#include "ttsupport/bigint.hpp"
#include "ttsupport/znum.hpp"
#include "ttsupport/matrix.hpp"
#include "ttsupport/snf.hpp"
#include "ttsupport/modcalc.hpp"
#include "ttsupport/complex.hpp"
#include "ttsupport/report.hpp"
#include "ttsupport/balmer.hpp"
#include "ttsupport/supportdata.hpp"
#include "ttsupport/serialize.hpp"
#include "ttsupport/verify.hpp"

#endif  // TTSUPPORT_TTSUPPORT_HPP
