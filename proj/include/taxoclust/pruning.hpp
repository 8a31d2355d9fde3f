// Removal of empty clusters.
//
// Every empty non-root cluster is dropped. A surviving cluster is reattached
// below its nearest surviving ancestor in the original tree; the root always
// survives, so such an ancestor always exists. Direct member sets do not
// change and levels are recomputed.

#pragma once

#include "taxoclust/kg_model.hpp"

namespace taxoclust {

ClusterHierarchy prune(const ClusterHierarchy& clusters);

}  // namespace taxoclust
