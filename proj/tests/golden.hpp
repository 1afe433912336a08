#pragma once

// Frozen reference values for -chi_r(GU(n,q)) and the p-primary variants.
// Every entry was produced by at least two of the independent pipelines and,
// where the group is small enough, confirmed by the brute-force descent
// oracle. Stored as decimal strings because the larger entries exceed any
// built-in integer type.

namespace golden {

// rows r = 1..10, columns n = 1..6
inline const char* kGuQ2[10][6] = {
    {"1", "0", "0", "0", "0", "0"},
    {"3", "3", "3", "3", "3", "3"},
    {"9", "36", "108", "288", "720", "1728"},
    {"27", "351", "3159", "23031", "147447", "866295"},
    {"81", "3240", "87480", "1826064", "31833648", "486808704"},
    {"243", "29403", "2381643", "146295963", "7312400955", "311364451899"},
    {"729", "265356", "64481508", "11797401168", "1737461438496",
     "215022264377472"},
    {"2187", "2390391", "1742595039", "954029264751", "418750612340175",
     "153622792013154831"},
    {"6561", "21520080", "47064414960", "77232074988384",
     "101464362907024032", "111196793301446665728"},
    {"19683", "193700403", "1270868344083", "6254569041419763",
     "24631600235268038067", "80864415095481249942195"},
};

// rows r = 1..8, columns n = 1..6
inline const char* kGuQ3[8][6] = {
    {"1", "0", "0", "0", "0", "0"},
    {"4", "4", "4", "4", "4", "4"},
    {"16", "96", "432", "1728", "6480", "23328"},
    {"64", "1792", "34624", "547840", "7686208", "99645184"},
    {"256", "30720", "2476800", "156155904", "8354389248", "398285973504"},
    {"1024", "507904", "167916544", "42412539904", "8835757941760",
     "1594131378454528"},
    {"4096", "8257536", "11077005312", "11229607231488", "9241842580475904",
     "6466592653901955072"},
    {"16384", "133169152", "720325525504", "2930658519285760",
     "9602002445280231424", "26472493990104785747968"},
};

// rows r = 1..8, columns n = 1..6
inline const char* kGuQ4[8][6] = {
    {"1", "0", "0", "0", "0", "0"},
    {"5", "5", "5", "5", "5", "5"},
    {"25", "200", "1200", "6400", "32000", "153600"},
    {"125", "6125", "206125", "5710125", "140878125", "3221070125"},
    {"625", "170000", "30820000", "4396160000", "536620000000",
     "58811402240000"},
    {"3125", "4503125", "4286503125", "3130866503125", "1903169845703125",
     "1012057046018503125"},
    {"15625", "116375000", "571933250000", "2128587804000000",
     "6477021075000000000", "16916743610887616000000"},
    {"78125", "2966328125", "74432741328125", "1405277322881328125",
     "21464540262745361328125", "277880845297817532881328125"},
};

// p-primary rows -chi^p_r(GU(n,q)) for n = 1..count
struct PPrimaryRow {
  unsigned p;
  long long q;
  unsigned r;
  unsigned count;
  const char* v[6];
};

inline const PPrimaryRow kPPrimary[] = {
    {2, 3, 2, 6, {"4", "4", "-4", "-12", "-12", "-4"}},
    {2, 9, 2, 6, {"2", "-6", "-14", "10", "34", "10"}},
    {2, 81, 2, 6, {"2", "-14", "-30", "82", "194", "-238"}},
    {2, -3, 2, 6, {"2", "-2", "-6", "-2", "2", "6"}},
    {2, -9, 2, 6, {"8", "24", "24", "-40", "-152", "-184"}},
    {2, -81, 2, 6, {"16", "112", "432", "880", "208", "-4144"}},
    {2, 3, 3, 6, {"16", "96", "176", "-832", "-5424", "-9184"}},
    {2, 9, 3, 6, {"4", "-120", "-500", "6928", "30228", "-255336"}},
    {2, 81, 3, 6, {"4", "-504", "-2036", "125968", "514068", "-20813288"}},
    {2, -3, 3, 6, {"4", "-24", "-116", "208", "1428", "-328"}},
    {2, -9, 3, 6, {"64", "1920", "35520", "446208", "3904320", "22659712"}},
    {2, -81, 3, 6,
     {"256", "32256", "2665216", "162331648", "7766985984", "303778507264"}},
    {3, 2, 2, 5, {"3", "3", "3", "6", "6", nullptr}},
    {3, 8, 2, 5, {"9", "36", "90", "180", "342", nullptr}},
    {3, 512, 2, 5, {"27", "351", "2943", "18036", "87048", nullptr}},
    {3, 4, 2, 5, {"1", "-1", "-1", "0", "0", nullptr}},
    {3, 64, 2, 5, {"1", "-4", "-4", "6", "6", nullptr}},
    {3, 262144, 2, 5, {"1", "-13", "-13", "78", "78", nullptr}},
    {3, 2, 3, 5, {"9", "36", "108", "342", "990", nullptr}},
    {3, 8, 3, 5, {"81", "3240", "85536", "1681236", "26321436", nullptr}},
    {3, 512, 3, 5,
     {"729", "265356", "64306548", "11672702802", "1692852267834", nullptr}},
    {3, 4, 3, 5, {"1", "-4", "-4", "6", "6", nullptr}},
    {3, 64, 3, 5, {"1", "-40", "-40", "780", "780", nullptr}},
    {3, 262144, 3, 5, {"1", "-364", "-364", "66066", "66066", nullptr}},
};

inline constexpr unsigned kPPrimaryCount = sizeof(kPPrimary) / sizeof(kPPrimary[0]);

}  // namespace golden
