// Thin forwarding header so library code does not depend on the vendor path.
#pragma once
#include <json.hpp>
