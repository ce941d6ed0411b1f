#ifndef RANGEKM_RANGEKM_HPP
#define RANGEKM_RANGEKM_HPP

#include "dataset.hpp"
#include "distance.hpp"
#include "error.hpp"
#include "init.hpp"
#include "io.hpp"
#include "kmeans.hpp"

#include "eval/benchmark.hpp"
#include "eval/blobs.hpp"
#include "eval/purity.hpp"
#include "eval/report.hpp"

#include "donor/encoding.hpp"
#include "donor/notify.hpp"
#include "donor/query.hpp"
#include "donor/records.hpp"
#include "donor/synthetic.hpp"

#endif
