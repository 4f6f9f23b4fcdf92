#pragma once

#include "aap/digest.hpp"
#include "aap/discoverability.hpp"
#include "aap/error.hpp"
#include "aap/expressivity.hpp"
#include "aap/fragment.hpp"
#include "aap/grounding.hpp"
#include "aap/io.hpp"
#include "aap/iri.hpp"
#include "aap/matcher.hpp"
#include "aap/module.hpp"
#include "aap/profile.hpp"
#include "aap/profile_document.hpp"
#include "aap/rational.hpp"
#include "aap/rdf.hpp"
#include "aap/rdfs.hpp"
#include "aap/registry.hpp"
#include "aap/report.hpp"
#include "aap/signature.hpp"
#include "aap/task_catalogue.hpp"
#include "aap/tbox.hpp"
#include "aap/trust_scope.hpp"
#include "aap/vocab.hpp"
