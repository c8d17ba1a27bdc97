#pragma once

// Reference values from the published tables this library reproduces.
// Transcribed verbatim, including the source's own misprints (e.g. the
// wire-data H and T rows; see README), so diffs against it are honest.

namespace progof::reference {

// Consistency studies: mean H per (n, m) row under each sampled family.
// Column order: N(0,1), t(3), t(4), DE(0,1) = laplace, L(0,1) = logistic.
struct ConsistencyRow {
    int n, m;
    double normal, t3, t4, laplace, logistic;
};

inline constexpr ConsistencyRow kConsistencyFamily1[] = {
    {50, 25, 0.0301, 0.0617, 0.0518, 0.0580, 0.0405},
    {100, 50, 0.0184, 0.0541, 0.0426, 0.0470, 0.0292},
    {200, 100, 0.0112, 0.0501, 0.0366, 0.0406, 0.0223},
    {300, 150, 0.0084, 0.0481, 0.0345, 0.0384, 0.0195},
    {400, 200, 0.0067, 0.0475, 0.0334, 0.0375, 0.0180},
    {500, 250, 0.0057, 0.0459, 0.0325, 0.0368, 0.0169},
    {600, 300, 0.0050, 0.0397, 0.0314, 0.0364, 0.0134},
};

// The m=40 row prints n=430; the family rule gives n=860 (source misprint).
inline constexpr ConsistencyRow kConsistencyFamily2[] = {
    {65, 10, 0.0639, 0.0951, 0.0865, 0.0789, 0.07356},
    {230, 20, 0.0391, 0.0818, 0.0695, 0.0535, 0.0504},
    {430, 40, 0.0241, 0.0737, 0.0594, 0.0365, 0.0346},
    {1890, 60, 0.0178, 0.0682, 0.0546, 0.0293, 0.0280},
    {3320, 80, 0.0144, 0.0630, 0.0525, 0.0246, 0.0244},
    {5150, 100, 0.0123, 0.0471, 0.0464, 0.0224, 0.0217},
};

// The m=40 row prints n=430; the family rule gives n=860 (source misprint).
inline constexpr ConsistencyRow kConsistencyFamily3[] = {
    {65, 10, 0.0665, 0.1124, 0.0994, 0.0949, 0.0812},
    {230, 20, 0.0449, 0.1128, 0.0924, 0.0785, 0.0636},
    {430, 40, 0.0295, 0.1191, 0.0922, 0.0647, 0.0522},
    {1890, 60, 0.0230, 0.1251, 0.0957, 0.0579, 0.0452},
    {3320, 80, 0.0188, 0.1249, 0.0974, 0.0540, 0.0425},
    {5150, 100, 0.0160, 0.1195, 0.0978, 0.0503, 0.0408},
};

inline constexpr ConsistencyRow kConsistencyFamily4[] = {
    {60, 50, 0.0170, 0.0429, 0.0343, 0.0397, 0.0247},
    {120, 100, 0.0104, 0.0391, 0.0291, 0.0343, 0.0185},
    {180, 150, 0.0077, 0.0379, 0.0269, 0.0323, 0.0158},
    {240, 200, 0.0064, 0.0369, 0.0258, 0.0318, 0.0145},
    {300, 250, 0.0051, 0.0361, 0.0247, 0.0312, 0.0135},
    {360, 300, 0.0046, 0.0350, 0.0243, 0.0305, 0.0130},
    {420, 350, 0.0041, 0.0313, 0.0239, 0.0300, 0.0101},
    {480, 400, 0.0037, 0.0215, 0.0193, 0.0274, 0.0097},
};

inline constexpr ConsistencyRow kConsistencyFamily5[] = {
    {50, 50, 0.0165, 0.0371, 0.0297, 0.0467, 0.0215},
    {100, 100, 0.0103, 0.0351, 0.0250, 0.0265, 0.0159},
    {200, 200, 0.0063, 0.0334, 0.0225, 0.0235, 0.0121},
    {400, 400, 0.0037, 0.0335, 0.0206, 0.0218, 0.0095},
    {800, 800, 0.0022, 0.0334, 0.0196, 0.0208, 0.0083},
    {1600, 1600, 0.0013, 0.0334, 0.0189, 0.0203, 0.0075},
    {3200, 3200, 0.0007, 0.0334, 0.0189, 0.0203, 0.0075},
};

// Critical values of H at alpha = 0.10 for the 27 catalog schemes.
struct CriticalValueRow {
    const char* scheme;
    double h;
};

inline constexpr CriticalValueRow kCriticalValuesH[] = {
    {"[1]", 0.1069},
    {"[2]", 0.1062},
    {"[3]", 0.1060},
    {"[4]", 0.0802},
    {"[5]", 0.0793},
    {"[6]", 0.0846},
    {"[7]", 0.0646},
    {"[8]", 0.0661},
    {"[9]", 0.0671},
    {"[10]", 0.1033},
    {"[11]", 0.0941},
    {"[12]", 0.0971},
    {"[13]", 0.0588},
    {"[14]", 0.0573},
    {"[15]", 0.0602},
    {"[16]", 0.0424},
    {"[17]", 0.0431},
    {"[18]", 0.0425},
    {"[19]", 0.0633},
    {"[20]", 0.0595},
    {"[21]", 0.0621},
    {"[22]", 0.0351},
    {"[23]", 0.0358},
    {"[24]", 0.0370},
    {"[25]", 0.0296},
    {"[26]", 0.0300},
    {"[27]", 0.0298},
};

// Statistic column order shared by the power and data-case tables.
inline constexpr const char* kStatisticOrder[] = {
    "C+", "C-", "C", "K", "T1", "T2", "G", "Q", "G2", "G3", "T", "H"};

// Estimated powers at alpha = 0.10, reps = 10000.  Values kept exactly as
// printed, including obvious misprints (0.03170, 0.14434, 0.897, 0.33276,
// 0.36369 and a duplicated [22] t4 row); spot checks avoid those cells.
struct PowerRow {
    const char* scheme;
    const char* alternative;
    double value[12];
};

inline constexpr PowerRow kPower[] = {
    {"[1]", "t3", {0.2224, 0.1112, 0.2251, 0.1681, 0.2266, 0.2158, 0.2438, 0.2528, 0.2676, 0.2341, 0.2567, 0.2638}},
    {"[1]", "t4", {0.1807, 0.1016, 0.1770, 0.1303, 0.1738, 0.1661, 0.1946, 0.2043, 0.2211, 0.1920, 0.2056, 0.2172}},
    {"[1]", "logistic", {0.1232, 0.1003, 0.1114, 0.0944, 0.1199, 0.1122, 0.1369, 0.1376, 0.1509, 0.1305, 0.1217, 0.1408}},
    {"[1]", "laplace", {0.1912, 0.0943, 0.1803, 0.1251, 0.1725, 0.1668, 0.2188, 0.2322, 0.2377, 0.2216, 0.1909, 0.2286}},
    {"[2]", "t3", {0.2450, 0.0507, 0.1463, 0.1459, 0.1541, 0.1554, 0.2057, 0.2272, 0.1579, 0.0754, 0.2461, 0.2895}},
    {"[2]", "t4", {0.1988, 0.0616, 0.1221, 0.1234, 0.1254, 0.1257, 0.1678, 0.1839, 0.1335, 0.0766, 0.1965, 0.2380}},
    {"[2]", "logistic", {0.1440, 0.0682, 0.0937, 0.0985, 0.1069, 0.0989, 0.1330, 0.1321, 0.1039, 0.0956, 0.1330, 0.1585}},
    {"[2]", "laplace", {0.2222, 0.0489, 0.1198, 0.1313, 0.1310, 0.1317, 0.1827, 0.2078, 0.1236, 0.0694, 0.1746, 0.2555}},
    {"[3]", "t3", {0.2592, 0.0471, 0.1887, 0.1288, 0.1802, 0.1771, 0.2316, 0.2541, 0.2883, 0.2570, 0.2543, 0.3000}},
    {"[3]", "t4", {0.2066, 0.0572, 0.1480, 0.1098, 0.1433, 0.1385, 0.1871, 0.2004, 0.2276, 0.2085, 0.2018, 0.2382}},
    {"[3]", "logistic", {0.1458, 0.0715, 0.1094, 0.0920, 0.1157, 0.1092, 0.1279, 0.1345, 0.1577, 0.1364, 0.1297, 0.1654}},
    {"[3]", "laplace", {0.2438, 0.0402, 0.1671, 0.1210, 0.1774, 0.1673, 0.2116, 0.2423, 0.2569, 0.2372, 0.1833, 0.2902}},
    {"[4]", "t3", {0.2233, 0.1464, 0.2510, 0.2000, 0.2598, 0.2583, 0.2523, 0.2716, 0.3036, 0.2802, 0.3071, 0.3008}},
    {"[4]", "t4", {0.1772, 0.1200, 0.1879, 0.1505, 0.1921, 0.1916, 0.2021, 0.2161, 0.2424, 0.2234, 0.2490, 0.2364}},
    {"[4]", "logistic", {0.1235, 0.0972, 0.1318, 0.1017, 0.1180, 0.1199, 0.1416, 0.1471, 0.1748, 0.1669, 0.1411, 0.1673}},
    {"[4]", "laplace", {0.1915, 0.1195, 0.2149, 0.1647, 0.2148, 0.2029, 0.2332, 0.2661, 0.2904, 0.2734, 0.2340, 0.2702}},
    {"[5]", "t3", {0.2630, 0.0448, 0.1848, 0.1526, 0.1892, 0.1873, 0.2579, 0.2807, 0.3003, 0.2657, 0.3190, 0.3526}},
    {"[5]", "t4", {0.2036, 0.0546, 0.1442, 0.1229, 0.1462, 0.1438, 0.2038, 0.2227, 0.2335, 0.2112, 0.2484, 0.2797}},
    {"[5]", "logistic", {0.1463, 0.0721, 0.1083, 0.0929, 0.1066, 0.1136, 0.1393, 0.1591, 0.1585, 0.1380, 0.1311, 0.1927}},
    {"[5]", "laplace", {0.2783, 0.0343, 0.1835, 0.1485, 0.1819, 0.1890, 0.2483, 0.3087, 0.3112, 0.2776, 0.1980, 0.3682}},
    {"[6]", "t3", {0.0952, 0.2467, 0.1784, 0.1908, 0.2123, 0.2259, 0.2703, 0.2895, 0.2732, 0.2211, 0.3386, 0.3367}},
    {"[6]", "t4", {0.0819, 0.1906, 0.1373, 0.1491, 0.1626, 0.1693, 0.2159, 0.2277, 0.2173, 0.1803, 0.2727, 0.2748}},
    {"[6]", "logistic", {0.0767, 0.1309, 0.1092, 0.1013, 0.1064, 0.1076, 0.1497, 0.1541, 0.1435, 0.1391, 0.1434, 0.1826}},
    {"[6]", "laplace", {0.0843, 0.2266, 0.1560, 0.1698, 0.1807, 0.1941, 0.2406, 0.2847, 0.2605, 0.2406, 0.2051, 0.3234}},
    {"[7]", "t3", {0.2183, 0.1881, 0.2718, 0.2332, 0.2894, 0.2865, 0.2694, 0.2832, 0.2942, 0.2586, 0.3407, 0.3193}},
    {"[7]", "t4", {0.1698, 0.1433, 0.2018, 0.1629, 0.2102, 0.2080, 0.2119, 0.2216, 0.2364, 0.2076, 0.2755, 0.2645}},
    {"[7]", "logistic", {0.1205, 0.1086, 0.1183, 0.0984, 0.1231, 0.1249, 0.1484, 0.1557, 0.1540, 0.1518, 0.1539, 0.1707}},
    {"[7]", "laplace", {0.1926, 0.1646, 0.2253, 0.1824, 0.2353, 0.2485, 0.2507, 0.2738, 0.2740, 0.2617, 0.2668, 0.2850}},
    {"[8]", "t3", {0.2533, 0.0740, 0.2055, 0.1652, 0.2048, 0.2021, 0.2799, 0.3089, 0.3164, 0.2917, 0.3309, 0.3684}},
    {"[8]", "t4", {0.1963, 0.0701, 0.1581, 0.1251, 0.1564, 0.1558, 0.2216, 0.2406, 0.2464, 0.2266, 0.2607, 0.2987}},
    {"[8]", "logistic", {0.1374, 0.0761, 0.1137, 0.0954, 0.1071, 0.1090, 0.1505, 0.1650, 0.1668, 0.1400, 0.1391, 0.1900}},
    {"[8]", "laplace", {0.2665, 0.0625, 0.2117, 0.1632, 0.2106, 0.2097, 0.2842, 0.3321, 0.3240, 0.3061, 0.2100, 0.3941}},
    {"[9]", "t3", {0.1531, 0.2330, 0.2292, 0.2185, 0.2621, 0.2663, 0.2839, 0.2997, 0.2805, 0.2255, 0.3479, 0.3204}},
    {"[9]", "t4", {0.1178, 0.1722, 0.1679, 0.1584, 0.1911, 0.2226, 0.2381, 0.2216, 0.1805, 0.2810, 0.2607, 0.2681}},
    {"[9]", "logistic", {0.0944, 0.1156, 0.1169, 0.1058, 0.1124, 0.1225, 0.1594, 0.1632, 0.1523, 0.1300, 0.1447, 0.1620}},
    {"[9]", "laplace", {0.1326, 0.1940, 0.2005, 0.1843, 0.2153, 0.2279, 0.2756, 0.2964, 0.2940, 0.2189, 0.2237, 0.2992}},
    {"[10]", "t3", {0.3111, 0.1037, 0.3002, 0.2300, 0.3094, 0.2918, 0.3258, 0.3457, 0.3408, 0.3507, 0.3098, 0.3380}},
    {"[10]", "t4", {0.2386, 0.0880, 0.2204, 0.1637, 0.2253, 0.2111, 0.2521, 0.2640, 0.2750, 0.2759, 0.2432, 0.2577}},
    {"[10]", "logistic", {0.1514, 0.0746, 0.1295, 0.1096, 0.1328, 0.1269, 0.1585, 0.1581, 0.1691, 0.1960, 0.1477, 0.1584}},
    {"[10]", "laplace", {0.2549, 0.0782, 0.2242, 0.1646, 0.2329, 0.2091, 0.2691, 0.2883, 0.2814, 0.3279, 0.2313, 0.2556}},
    {"[11]", "t3", {0.3057, 0.0404, 0.1832, 0.1939, 0.1881, 0.1952, 0.2153, 0.2417, 0.0773, 0.0473, 0.03170, 0.3527}},
    {"[11]", "t4", {0.2384, 0.0488, 0.1411, 0.1539, 0.1462, 0.1520, 0.1728, 0.1920, 0.0753, 0.0589, 0.2646, 0.2847}},
    {"[11]", "logistic", {0.1541, 0.0704, 0.1024, 0.1173, 0.0967, 0.1101, 0.1180, 0.1301, 0.0745, 0.0855, 0.1312, 0.1800}},
    {"[11]", "laplace", {0.2041, 0.0484, 0.1156, 0.14434, 0.1178, 0.1268, 0.1489, 0.1594, 0.0640, 0.0540, 0.1545, 0.2384}},
    {"[12]", "t3", {0.1814, 0.0720, 0.1291, 0.1465, 0.1715, 0.1835, 0.2912, 0.3369, 0.3318, 0.2963, 0.3703, 0.4090}},
    {"[12]", "t4", {0.1413, 0.0594, 0.1048, 0.1082, 0.1263, 0.1393, 0.2261, 0.2566, 0.2577, 0.2303, 0.2819, 0.3171}},
    {"[12]", "logistic", {0.1091, 0.0614, 0.0841, 0.0842, 0.897, 0.0875, 0.1341, 0.1686, 0.1528, 0.1483, 0.1453, 0.2013}},
    {"[12]", "laplace", {0.1527, 0.0372, 0.0987, 0.0914, 0.1201, 0.1205, 0.2096, 0.2754, 0.2429, 0.2413, 0.2469, 0.3116}},
    {"[13]", "t3", {0.1363, 0.2004, 0.3627, 0.3282, 0.3897, 0.3860, 0.3567, 0.3866, 0.4212, 0.4415, 0.3797, 0.4318}},
    {"[13]", "t4", {0.2544, 0.1407, 0.2617, 0.2208, 0.2738, 0.2725, 0.2689, 0.2940, 0.3319, 0.3501, 0.3018, 0.3369}},
    {"[13]", "logistic", {0.1415, 0.1015, 0.1456, 0.1200, 0.1407, 0.1471, 0.1645, 0.1700, 0.1828, 0.2236, 0.1651, 0.2040}},
    {"[13]", "laplace", {0.2980, 0.1557, 0.2974, 0.2668, 0.3148, 0.3241, 0.2969, 0.33276, 0.3497, 0.3984, 0.2635, 0.3751}},
    {"[14]", "t3", {0.4075, 0.0375, 0.2934, 0.2543, 0.3087, 0.3124, 0.3095, 0.3592, 0.3960, 0.3913, 0.4820, 0.5050}},
    {"[14]", "t4", {0.3070, 0.0395, 0.2076, 0.1807, 0.2100, 0.2145, 0.2359, 0.2706, 0.3071, 0.3049, 0.3729, 0.3886}},
    {"[14]", "logistic", {0.1848, 0.0623, 0.1267, 0.1070, 0.1177, 0.1229, 0.1504, 0.1612, 0.1758, 0.1968, 0.1374, 0.2325}},
    {"[14]", "laplace", {0.4194, 0.0186, 0.2619, 0.2113, 0.2737, 0.2944, 0.2724, 0.3205, 0.3443, 0.3652, 0.2506, 0.4484}},
    {"[15]", "t3", {0.1300, 0.3242, 0.2457, 0.2549, 0.2921, 0.3088, 0.3628, 0.4177, 0.4143, 0.4054, 0.4822, 0.5062}},
    {"[15]", "t4", {0.0962, 0.2350, 0.1700, 0.1765, 0.2003, 0.2096, 0.2773, 0.3184, 0.3150, 0.3109, 0.3797, 0.3987}},
    {"[15]", "logistic", {0.0751, 0.1377, 0.1073, 0.1152, 0.1136, 0.1211, 0.1723, 0.1905, 0.1932, 0.1932, 0.1624, 0.2454}},
    {"[15]", "laplace", {0.1071, 0.2996, 0.2098, 0.2307, 0.2793, 0.2967, 0.3308, 0.4087, 0.3884, 0.4057, 0.2597, 0.4997}},
    {"[16]", "t3", {0.3546, 0.2936, 0.4107, 0.3990, 0.4461, 0.4501, 0.3786, 0.4153, 0.4316, 0.4186, 0.4152, 0.4737}},
    {"[16]", "t4", {0.2499, 0.2000, 0.2784, 0.2635, 0.3096, 0.3087, 0.2802, 0.3084, 0.3285, 0.3197, 0.3281, 0.3666}},
    {"[16]", "logistic", {0.1411, 0.1157, 0.1412, 0.1272, 0.1521, 0.1467, 0.1626, 0.1852, 0.1987, 0.2013, 0.1903, 0.2168}},
    {"[16]", "laplace", {0.3175, 0.2432, 0.3443, 0.3455, 0.3900, 0.3992, 0.3292, 0.3717, 0.3921, 0.4011, 0.2906, 0.4573}},
    {"[17]", "t3", {0.3961, 0.0941, 0.3201, 0.2794, 0.3346, 0.3410, 0.3847, 0.4430, 0.4615, 0.4671, 0.4998, 0.5470}},
    {"[17]", "t4", {0.2920, 0.0661, 0.2259, 0.1878, 0.2373, 0.2387, 0.2865, 0.3333, 0.3481, 0.3508, 0.3894, 0.4317}},
    {"[17]", "logistic", {0.1695, 0.0586, 0.1278, 0.1057, 0.1246, 0.1386, 0.1648, 0.1950, 0.2115, 0.2326, 0.1632, 0.2567}},
    {"[17]", "laplace", {0.4396, 0.0527, 0.3429, 0.2903, 0.3656, 0.3753, 0.3772, 0.4531, 0.4757, 0.5266, 0.2870, 0.5688}},
    {"[18]", "t3", {0.3741, 0.1213, 0.3201, 0.2835, 0.3379, 0.3416, 0.3863, 0.4400, 0.4490, 0.4538, 0.4439, 0.5330}},
    {"[18]", "t4", {0.2769, 0.0849, 0.2244, 0.1925, 0.2365, 0.2402, 0.2889, 0.3318, 0.3426, 0.3452, 0.3461, 0.4115}},
    {"[18]", "logistic", {0.1582, 0.0726, 0.1246, 0.1061, 0.1395, 0.1321, 0.1864, 0.1985, 0.2037, 0.2036, 0.1576, 0.2479}},
    {"[18]", "laplace", {0.3883, 0.0976, 0.3167, 0.2919, 0.3603, 0.3329, 0.3677, 0.4269, 0.4321, 0.4699, 0.2503, 0.5099}},
    {"[19]", "t3", {0.4230, 0.1869, 0.4158, 0.3865, 0.4521, 0.4469, 0.4163, 0.4513, 0.4404, 0.5027, 0.3904, 0.4785}},
    {"[19]", "t4", {0.3098, 0.1264, 0.2962, 0.2576, 0.3154, 0.3087, 0.3096, 0.3428, 0.3365, 0.3904, 0.3073, 0.3710}},
    {"[19]", "logistic", {0.1777, 0.0845, 0.1550, 0.1286, 0.1536, 0.1423, 0.1826, 0.1988, 0.2162, 0.2221, 0.1680, 0.2102}},
    {"[19]", "laplace", {0.3499, 0.1380, 0.3285, 0.2934, 0.3425, 0.3261, 0.3390, 0.3982, 0.3413, 0.3860, 0.2666, 0.3971}},
    {"[20]", "t3", {0.4547, 0.0220, 0.3208, 0.2860, 0.3392, 0.3472, 0.2853, 0.3377, 0.2925, 0.2383, 0.5208, 0.5308}},
    {"[20]", "t4", {0.3478, 0.0312, 0.2229, 0.2003, 0.2332, 0.2406, 0.2152, 0.2517, 0.2161, 0.1713, 0.4021, 0.4154}},
    {"[20]", "logistic", {0.1985, 0.0512, 0.1223, 0.1136, 0.1235, 0.1286, 0.1461, 0.1599, 0.1195, 0.1085, 0.1399, 0.2434}},
    {"[20]", "laplace", {0.3416, 0.0224, 0.2026, 0.1761, 0.2149, 0.2176, 0.2058, 0.2468, 0.1533, 0.1207, 0.2026, 0.3815}},
    {"[21]", "t3", {0.1537, 0.2744, 0.2065, 0.2770, 0.2871, 0.3231, 0.3994, 0.4680, 0.4739, 0.4303, 0.5826, 0.6001}},
    {"[21]", "t4", {0.1051, 0.1762, 0.1354, 0.1757, 0.1839, 0.2116, 0.2988, 0.3540, 0.3527, 0.3163, 0.4496, 0.4700}},
    {"[21]", "logistic", {0.0830, 0.0999, 0.0826, 0.0891, 0.1023, 0.1047, 0.1772, 0.2033, 0.1978, 0.1796, 0.1595, 0.2718}},
    {"[21]", "laplace", {0.1355, 0.1732, 0.1407, 0.1974, 0.2154, 0.2346, 0.3432, 0.4297, 0.4373, 0.4069, 0.2931, 0.5277}},
    {"[22]", "t3", {0.4571, 0.3707, 0.5185, 0.5201, 0.5653, 0.5719, 0.4529, 0.5039, 0.5243, 0.5370, 0.4446, 0.5715}},
    {"[22]", "t4", {0.1963, 0.0701, 0.1581, 0.1251, 0.1564, 0.1558, 0.2216, 0.2406, 0.2464, 0.2266, 0.2607, 0.4462}},
    {"[22]", "logistic", {0.1503, 0.1237, 0.1621, 0.1491, 0.1786, 0.1764, 0.1805, 0.2000, 0.2090, 0.2298, 0.1911, 0.2441}},
    {"[22]", "laplace", {0.3981, 0.2911, 0.4360, 0.4678, 0.5049, 0.5090, 0.3715, 0.4322, 0.4402, 0.4912, 0.3024, 0.4984}},
    {"[23]", "t3", {0.5234, 0.1172, 0.4238, 0.3831, 0.4550, 0.4567, 0.4385, 0.5148, 0.5779, 0.5981, 0.6351, 0.6714}},
    {"[23]", "t4", {0.3841, 0.0652, 0.2840, 0.2454, 0.3064, 0.3083, 0.3228, 0.3847, 0.4409, 0.4929, 0.2607, 0.5298}},
    {"[23]", "logistic", {0.2163, 0.0518, 0.1472, 0.1265, 0.1473, 0.1502, 0.1886, 0.2124, 0.2422, 0.2622, 0.1712, 0.3148}},
    {"[23]", "laplace", {0.6119, 0.0461, 0.4696, 0.4136, 0.5146, 0.5225, 0.4309, 0.5162, 0.6080, 0.6556, 0.4060, 0.6967}},
    {"[24]", "t3", {0.3141, 0.4451, 0.4329, 0.4479, 0.4833, 0.4927, 0.4523, 0.5161, 0.5161, 0.5193, 0.5263, 0.6261}},
    {"[24]", "t4", {0.1950, 0.3175, 0.2862, 0.2975, 0.3233, 0.3324, 0.3371, 0.3890, 0.3876, 0.3912, 0.4167, 0.4838}},
    {"[24]", "logistic", {0.0990, 0.1656, 0.1488, 0.1408, 0.1557, 0.1548, 0.1984, 0.2225, 0.2316, 0.2301, 0.1749, 0.2938}},
    {"[24]", "laplace", {0.2946, 0.4103, 0.4173, 0.4244, 0.4865, 0.4846, 0.4079, 0.4856, 0.4971, 0.5211, 0.3063, 0.5832}},
    {"[25]", "t3", {0.4838, 0.4407, 0.5496, 0.5684, 0.6065, 0.6245, 0.4657, 0.5189, 0.5224, 0.5280, 0.4634, 0.5940}},
    {"[25]", "t4", {0.3296, 0.2879, 0.3724, 0.3788, 0.4189, 0.4261, 0.3361, 0.3809, 0.3902, 0.3910, 0.36369, 0.4659}},
    {"[25]", "logistic", {0.1552, 0.1360, 0.1606, 0.1605, 0.1834, 0.1788, 0.1849, 0.1992, 0.2157, 0.2224, 0.1977, 0.2639}},
    {"[25]", "laplace", {0.4304, 0.3850, 0.4865, 0.5501, 0.5685, 0.5850, 0.3942, 0.4436, 0.4715, 0.4904, 0.3039, 0.5128}},
    {"[26]", "t3", {0.4908, 0.1752, 0.4140, 0.4005, 0.4492, 0.4552, 0.4645, 0.5355, 0.5497, 0.5744, 0.5754, 0.6567}},
    {"[26]", "t4", {0.3548, 0.1029, 0.2788, 0.2605, 0.3021, 0.3077, 0.3456, 0.3989, 0.4124, 0.4333, 0.4447, 0.5107}},
    {"[26]", "logistic", {0.1839, 0.0697, 0.1562, 0.1206, 0.1558, 0.1527, 0.1997, 0.2219, 0.2333, 0.2504, 0.1666, 0.3074}},
    {"[26]", "laplace", {0.5219, 0.1568, 0.4641, 0.4382, 0.5160, 0.4952, 0.4495, 0.5341, 0.5499, 0.6007, 0.3264, 0.6580}},
    {"[27]", "t3", {0.4670, 0.2110, 0.4169, 0.4109, 0.4574, 0.4616, 0.4619, 0.5236, 0.5275, 0.5526, 0.4998, 0.6217}},
    {"[27]", "t4", {0.3330, 0.1286, 0.2819, 0.2719, 0.3149, 0.3146, 0.3428, 0.3917, 0.3980, 0.4155, 0.3871, 0.4983}},
    {"[27]", "logistic", {0.1796, 0.0861, 0.1443, 0.1315, 0.1537, 0.1545, 0.1905, 0.2172, 0.2170, 0.2393, 0.1635, 0.2842}},
    {"[27]", "laplace", {0.4800, 0.2140, 0.4486, 0.4521, 0.5073, 0.5037, 0.4226, 0.4995, 0.5100, 0.5325, 0.2744, 0.6037}},
};

// Wire-strength data case: printed statistic values and Monte Carlo
// p-values.  The H and T statistic cells are known misprints (see README).
struct DataCaseRow {
    const char* statistic;
    double value;
    double p_value;
};

inline constexpr DataCaseRow kWireCase[] = {
    {"C+", 0.0946, 0.6576},
    {"C-", 0.0893, 0.3809},
    {"C", 0.0946, 0.7057},
    {"K", 0.1839, 0.5364},
    {"T1", 0.0021, 0.8020},
    {"T2", 0.0352, 0.8735},
    {"G", 6.8499, 0.7152},
    {"Q", 10.9208, 0.6476},
    {"G2", 26.7465, 0.6879},
    {"G3", 63.8562, 0.6689},
    {"T", 0.4568, 0.6450},
    {"H", 0.3220, 0.8091},
};

}  // namespace progof::reference
