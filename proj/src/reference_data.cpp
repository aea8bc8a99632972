// Generated from the published tables; do not edit by hand.
#include "permball/reference_data.hpp"

namespace permball::reference {

const std::vector<std::pair<int, int>>& class_table_columns() {
  static const std::vector<std::pair<int, int>> columns = {{5, 5}, {6, 5}, {7, 5}, {8, 5}, {9, 5}, {6, 6}, {7, 6}, {8, 6}, {9, 6}, {10, 6}, {11, 6}, {7, 7}, {8, 7}, {9, 7}, {10, 7}, {11, 7}, {12, 7}, {13, 7}};
  return columns;
}

const std::vector<ClassTableRow>& class_table_rows() {
  static const std::vector<ClassTableRow> rows = {
      {"2", {"120", "358", "802", "1516", "2564", "720", "2612", "6946", "15234", "29350", "51530", "5040", "21514", "66222", "165318", "357458", "696228", "1252572"}},
      {"3", {"120", "327", "678", "1206", "1944", "720", "2409", "5931", "12189", "22245", "37320", "5040", "20013", "57216", "133797", "273402", "507102", "874320"}},
      {"4", {"120", "304", "576", "936", "1384", "720", "2248", "5128", "9784", "16640", "26120", "5040", "18768", "50064", "109560", "210360", "368040", "600648"}},
      {"5", {"120", "285", "465", "660", "870", "720", "2115", "4360", "7510", "11620", "16745", "5040", "17715", "43645", "87995", "156195", "253940", "387190"}},
      {"6", {"120", "270", "354", "438", "522", "720", "2004", "3594", "5490", "7692", "10200", "5040", "16818", "37518", "68604", "111540", "167790", "238818"}},
      {"7", {"", "238", "245", "252", "252", "720", "1911", "2821", "3752", "4704", "5677", "5040", "16051", "31472", "51380", "75852", "104965", "138796"}},
      {"8", {"", "", "", "98", "98", "720", "", "2032", "2240", "2448", "2656", "5040", "15392", "25376", "36112", "47600", "59840", "72832"}},
      {"9", {"", "", "", "", "2", "720", "", "", "909", "918", "927", "5040", "", "19179", "22608", "26064", "29547", "33057"}},
      {"10", {"", "", "", "", "", "720", "", "", "", "170", "170", "5040", "", "", "10570", "10990", "11410", "11830"}},
      {"11", {"", "", "", "", "", "720", "", "", "", "", "11", "5040", "", "", "", "2706", "2717", "2728"}},
      {"12", {"", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "312", "312"}},
      {"13", {"", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "13"}},
      {"2^2", {"120", "306", "586", "964", "1444", "720", "2252", "5162", "9914", "16990", "26890", "5040", "18786", "50242", "110358", "212838", "374228", "614004"}},
      {"2^3", {"", "270", "342", "414", "486", "720", "2004", "3582", "5454", "7620", "10080", "5040", "16830", "37518", "68532", "111300", "167250", "237810"}},
      {"2^4", {"", "", "", "102", "102", "720", "", "2062", "2302", "2548", "2800", "5040", "15406", "25390", "36340", "48268", "61186", "75106"}},
      {"2^5", {"", "", "", "", "", "", "", "", "", "260", "260", "5040", "", "", "10660", "11260", "11860", "12460"}},
      {"3^2", {"120", "272", "356", "442", "530", "720", "2004", "3602", "5518", "7756", "10320", "5040", "16820", "37540", "68698", "111810", "168410", "240050"}},
      {"3^3", {"", "", "", "", "18", "", "", "", "948", "966", "984", "5040", "", "19200", "22656", "26166", "29730", "33348"}},
      {"4^2", {"", "", "", "98", "98", "720", "", "2050", "2258", "2468", "2680", "5040", "15394", "25378", "36132", "47660", "59966", "73054"}},
      {"5^2", {"", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", ""}},
      {"3,2", {"120", "286", "466", "660", "868", "720", "2116", "4366", "7528", "11660", "16820", "5040", "17722", "43690", "88150", "156590", "254780", "388772"}},
      {"4,2", {"120", "", "350", "430", "510", "720", "", "2026", "2226", "2426", "2626", "5040", "16822", "37518", "68580", "111460", "167610", "238482"}},
      {"5,2", {"", "", "242", "252", "262", "720", "1912", "2822", "3762", "4732", "5732", "5040", "16054", "31470", "51398", "75948", "105230", "139354"}},
      {"6,2", {"", "", "", "72", "72", "720", "", "2026", "2242", "2458", "2674", "5040", "15394", "25378", "36154", "47722", "60082", "73234"}},
      {"7,2", {"", "", "", "", "14", "720", "", "", "924", "938", "952", "5040", "", "19182", "22626", "26112", "29640", "33210"}},
      {"8,2", {"", "", "", "", "", "", "", "", "", "176", "176", "5040", "", "", "10576", "11056", "11536", "12016"}},
      {"9,2", {"", "", "", "", "", "", "", "", "", "", "18", "5040", "", "", "", "2790", "2808", "2826"}},
      {"4,3", {"120", "", "230", "238", "246", "720", "1910", "2824", "3756", "4706", "5674", "5040", "16052", "31474", "51382", "75852", "104960", "138782"}},
      {"5,3", {"", "", "", "82", "82", "720", "", "2032", "2232", "2432", "2632", "5040", "15392", "25368", "36086", "47546", "59748", "72692"}},
      {"6,3", {"", "", "", "", "12", "720", "", "", "922", "934", "946", "5040", "", "19174", "22636", "26144", "29698", "33298"}},
      {"7,3", {"", "", "", "", "", "", "", "", "", "154", "154", "5040", "", "", "10544", "10964", "11384", "11804"}},
      {"8,3", {"", "", "", "", "", "", "", "", "", "", "16", "5040", "", "", "", "2736", "2752", "2768"}},
      {"5,4", {"", "", "", "", "2", "", "", "", "882", "892", "902", "5040", "", "19164", "22602", "26062", "29544", "33048"}},
      {"6,4", {"", "", "", "", "", "", "", "", "", "176", "176", "5040", "", "", "10576", "10984", "11392", "11800"}},
      {"7,4", {"", "", "", "", "", "", "", "", "", "", "2", "5040", "", "", "", "10964", "10964", "10964"}},
      {"3,2^2", {"", "270", "238", "252", "266", "720", "1912", "2826", "3776", "4762", "5784", "5040", "16058", "31470", "51418", "76044", "105490", "139898"}},
      {"4,2^2", {"", "", "", "82", "82", "720", "2038", "", "2262", "2488", "2716", "5040", "15398", "25382", "36216", "47904", "60450", "73858"}},
      {"5,2^2", {"", "", "", "", "12", "720", "", "2032", "", "932", "952", "5040", "", "19170", "22638", "26158", "29730", "33354"}},
      {"6,2^2", {"", "", "", "", "", "", "", "", "", "188", "188", "5040", "", "", "10588", "11116", "11644", "12172"}},
      {"7,2^2", {"", "", "", "", "", "", "", "", "", "", "28", "5040", "", "", "", "10932", "10932", "10932"}},
      {"4,3,2", {"", "", "", "", "10", "720", "", "", "910", "928", "946", "5040", "", "19150", "22660", "26236", "29878", "33586"}},
      {"5,3,2", {"", "", "", "", "", "", "", "", "", "192", "192", "5040", "", "", "10622", "11102", "11584", "12068"}},
      {"6,3,2", {"", "", "", "", "", "", "", "", "", "", "14", "5040", "", "", "10576", "10984", "11384", "11804"}},
      {"3^2,2", {"120", "", "", "76", "76", "720", "15394", "", "", "11044", "", "5040", "15394", "25362", "36102", "47614", "59698", "72954"}},
      {"4,3^2", {"", "", "", "", "", "", "", "", "", "220", "220", "5040", "", "", "10680", "11208", "11740", "12276"}},
      {"5,4,2", {"", "", "", "", "", "", "", "", "", "202", "202", "5040", "", "", "10642", "11062", "11484", "11908"}},
      {"3,2^3", {"", "", "", "", "6", "720", "", "", "886", "916", "946", "5040", "", "19150", "22600", "26144", "29698", "33298"}},
      {"4,2^3", {"", "", "", "", "", "", "", "", "", "212", "212", "5040", "", "", "10612", "11164", "11716", "12268"}},
      {"5,2^3", {"", "", "", "", "", "", "", "", "", "", "32", "5040", "", "", "", "2972", "3014", "3056"}},
      {"3^2,3", {"", "", "", "", "", "", "", "", "948", "", "", "5040", "", "19186", "22624", "26098", "29608", "33154"}},
      {"4,3,2^2", {"", "", "", "", "", "", "", "", "", "144", "144", "5040", "", "", "10524", "10524", "11340", "11748"}},
      {"5,3,2^2", {"", "", "", "", "", "", "", "", "", "", "12", "5040", "", "", "", "2702", "2724", "2746"}},
      {"3^2,2^2", {"", "", "", "", "", "", "", "", "", "202", "202", "5040", "", "", "10642", "11116", "11584", "12068"}},
      {"4^2,2", {"", "", "", "", "", "", "", "", "", "188", "188", "5040", "", "", "10588", "11044", "11500", "11956"}},
  };
  return rows;
}

const std::vector<std::string>& class_table_maxima() {
  static const std::vector<std::string> row = {"120", "358", "802", "1516", "2564", "720", "2612", "6946", "15234", "29350", "51530", "5040", "21514", "66222", "165318", "357458", "696228", "1252572"};
  return row;
}

const std::vector<LargeRCell>& large_r_cells() {
  static const std::vector<LargeRCell> cells = {
      {8, 8, "40320"},
      {9, 8, "197864"},
      {9, 9, "362880"},
      {10, 8, "691886"},
      {10, 9, "2012014"},
      {10, 10, "3628800"},
      {11, 8, "1937162"},
      {11, 9, "7877738"},
      {11, 10, "22428812"},
      {11, 11, "39916800"},
      {12, 8, "4645488"},
      {12, 9, "24447408"},
      {12, 10, "97202778"},
      {12, 11, "272082658"},
      {12, 12, "479001600"},
      {13, 8, "9940944"},
      {13, 9, "64396224"},
      {13, 10, "331165914"},
      {13, 11, "1293005254"},
      {13, 12, "3569113616"},
      {13, 13, "6227020800"},
      {14, 8, "19493964"},
      {14, 9, "150186636"},
      {14, 10, "950495706"},
      {14, 11, "4797853066"},
      {14, 12, "18454503238"},
      {14, 13, "50349389446"},
      {14, 14, "87178291200"},
      {15, 8, "35674212"},
      {15, 9, "318841668"},
      {15, 10, "2399645250"},
      {15, 11, "14903556670"},
      {15, 12, "74082374082"},
      {15, 13, "281399134434"},
      {15, 14, "760174857236"},
      {16, 8, "61722264"},
      {16, 9, "628057176"},
      {16, 10, "5483265534"},
      {16, 11, "40494217510"},
      {16, 12, "247620078452"},
      {16, 13, "1215098293428"},
      {16, 14, "4566528353042"},
      {17, 8, "101940096"},
      {17, 9, "1163818056"},
      {17, 10, "11567835966"},
      {17, 11, "99095215906"},
      {17, 12, "720472798732"},
      {17, 13, "4348516104892"},
      {17, 14, "21105666402962"},
      {18, 8, "161900378"},
      {18, 9, "2049683418"},
      {18, 10, "22857719238"},
      {18, 11, "222920301958"},
      {18, 12, "1879927189494"},
      {18, 13, "13489665769206"},
      {18, 14, "80518266961486"},
      {19, 8, "248674574"},
      {19, 9, "3457905742"},
      {19, 10, "42761973402"},
      {19, 11, "467894961682"},
      {19, 12, "4492054545698"},
      {19, 13, "37386313854882"},
      {19, 14, "265283557908634"},
      {20, 8, "371079848"},
      {20, 9, "5622549032"},
      {20, 10, "76369870820"},
      {20, 11, "926635847380"},
      {20, 12, "9980994911416"},
      {20, 13, "94566233135032"},
      {20, 14, "778257965296288"},
      {21, 8, "539944776"},
      {21, 9, "8854770984"},
      {21, 10, "131054690436"},
      {21, 11, "1746560045900"},
      {21, 12, "20861318069976"},
      {21, 13, "221751258851064"},
      {21, 14, "2077485960431616"},
      {22, 8, "768393864"},
      {22, 9, "13560434184"},
      {22, 10, "217226966604"},
      {22, 11, "3154509431084"},
      {22, 12, "41384025479236"},
      {22, 13, "487806116103876"},
      {22, 14, "5127142870055256"},
      {23, 8, "1072150872"},
      {23, 9, "20260211352"},
      {23, 10, "349259994492"},
      {23, 11, "5489504307332"},
      {23, 12, "78473125853804"},
      {23, 13, "1015959516165548"},
      {23, 14, "11841078608718768"},
      {24, 8, "1469860944"},
      {24, 9, "29612349648"},
      {24, 10, "546612008868"},
      {24, 11, "9245486999828"},
      {24, 12, "143048793168360"},
      {24, 13, "2018021573791848"},
      {24, 14, "25833283577408932"},
      {25, 8, "1983431544"},
      {25, 9, "42438259056"},
      {25, 10, "835171069860"},
      {25, 11, "15126179983580"},
      {25, 12, "251855106281752"},
      {25, 13, "3845552935810104"},
      {26, 8, "2638392198"},
      {26, 9, "59751089862"},
      {26, 10, "1248850306068"},
      {26, 11, "24114464568020"},
      {26, 12, "429935481079172"},
      {27, 8, "3464273042"},
      {27, 9, "82787464242"},
      {27, 10, "1831462782192"},
      {27, 11, "37558985066492"},
      {27, 12, "713927345918412"},
      {28, 8, "4495002176"},
      {28, 9, "113042526976"},
      {28, 10, "2638906875126"},
      {28, 11, "57280999780526"},
      {28, 12, "1156379586164896"},
      {29, 8, "5769321824"},
      {29, 9, "152308480304"},
      {29, 10, "3741694659254"},
      {29, 11, "85704834017354"},
      {30, 8, "7331223300"},
      {30, 9, "202716767940"},
      {30, 10, "5227857418470"},
      {30, 11, "126015641735670"},
      {31, 8, "9230400780"},
      {31, 9, "266784073260"},
      {31, 10, "7206264019230"},
      {31, 11, "182348551279170"},
      {32, 8, "11522723880"},
      {32, 9, "347462296680"},
      {32, 10, "9810389495730"},
      {32, 11, "260013657009930"},
      {33, 8, "14270729040"},
      {33, 9, "448192677240"},
      {33, 10, "13202572815090"},
      {33, 11, "365761722494190"},
      {34, 8, "17544129714"},
      {34, 9, "572964223410"},
      {34, 10, "17578804407210"},
      {34, 11, "508095882221610"},
      {35, 8, "21420345366"},
      {35, 9, "726376618134"},
      {35, 10, "23174085660750"},
      {35, 11, "697635067655550"},
      {36, 8, "25985049272"},
      {36, 9, "913707763128"},
      {36, 10, "30268404203472"},
      {36, 11, "947535339716400"},
      {37, 8, "31332735128"},
      {37, 9, "1140986127448"},
      {37, 10, "39193370401968"},
      {37, 11, "1273975783592448"},
      {38, 8, "37567302464"},
      {38, 9, "1415068065344"},
      {38, 10, "50339562132584"},
      {39, 8, "44802660864"},
      {39, 9, "1743720268416"},
      {39, 10, "64164626492136"},
      {40, 8, "53163352992"},
      {40, 9, "2135707517088"},
      {40, 10, "81202188733800"},
      {41, 8, "62785196424"},
      {42, 8, "73815944286"},
      {43, 8, "86415964698"},
  };
  return cells;
}

const std::vector<std::string>& polynomial_list_r5() {
  static const std::vector<std::string> polys = {
      "32/3*n^3-89*n^2+739/3*n-220",
      "2/3*n^3+35*n^2-779/3*n+460",
      "72*n-162",
      "102",
      "0",
      "11/2*n^3-27*n^2+7/2*n+90",
      "7*n^2+89*n-500",
      "14*n+140",
      "6",
      "n^2+71*n-190",
      "76",
      "4",
      "18",
      "44*n^2-300*n+520",
      "80*n-210",
      "82",
      "0",
      "8*n+174",
      "10",
      "0",
      "98",
      "0",
      "15/2*n^2+165/2*n-480",
      "10*n+172",
      "12",
      "82",
      "2",
      "2",
      "2",
      "84*n-234",
      "72",
      "0",
      "12",
      "0",
      "7*n+189",
      "14",
      "0",
      "80",
      "0",
      "9",
      "0",
  };
  return polys;
}

const std::vector<std::string>& polynomial_list_r6() {
  static const std::vector<std::string> polys = {
      "181/12*n^4-401/2*n^3+11783/12*n^2-4153/2*n+1590",
      "3/4*n^4+329/6*n^3-2735/4*n^2+15769/6*n-3250",
      "147*n^2-627*n-810",
      "3*n^2+189*n+358",
      "260",
      "20",
      "53/8*n^4-193/4*n^3-197/8*n^2+3265/4*n-1455",
      "29/3*n^3+224*n^2-8231/3*n+7030",
      "18*n^2+644*n-3478",
      "30*n+616",
      "26",
      "2/3*n^3+143*n^2-1979/3*n-614",
      "200*n+426",
      "220",
      "2",
      "18*n+786",
      "6",
      "6",
      "212/3*n^3-808*n^2+9172/3*n-3800",
      "151*n^2-679*n-642",
      "n^2+207*n+318",
      "212",
      "8",
      "9*n^2+779*n-3984",
      "18*n+748",
      "18",
      "144",
      "2",
      "n^2+191*n+458",
      "188",
      "4",
      "22",
      "0",
      "55/6*n^3+465/2*n^2-8375/3*n+7120",
      "15*n^2+685*n-3618",
      "20*n+732",
      "32",
      "200*n+432",
      "192",
      "0",
      "12",
      "10*n+792",
      "12",
      "0",
      "202",
      "0",
      "153*n^2-705*n-558",
      "216*n+298",
      "188",
      "2",
      "12*n+814",
      "14",
      "2",
      "176",
      "2",
      "2",
      "2",
      "21/2*n^2+1505/2*n-3871",
      "14*n+798",
      "28",
      "154",
      "0",
      "14",
      "0",
      "208*n+368",
      "176",
      "0",
      "16",
      "0",
      "9*n+828",
      "18",
      "0",
      "170",
      "0",
      "11",
      "0",
  };
  return polys;
}

const std::vector<std::string>& polynomial_list_r7() {
  static const std::vector<std::string> polys = {
      "607/30*n^5-4675/12*n^4+8807/3*n^3-129041/12*n^2+190471/10*n-12978",
      "11/15*n^5+327/4*n^4-8917/6*n^3+37061/4*n^2-730247/30*n+22582",
      "238*n^3-1263*n^2-9487*n+51702",
      "2*n^3+429*n^2+2257*n-31130",
      "600*n+4660",
      "740",
      "0",
      "309/40*n^5-615/8*n^4-1031/8*n^3+31551/8*n^2-308017/20*n+18543",
      "47/4*n^4+2809/6*n^3-36467/4*n^2+302381/6*n-89810",
      "71/3*n^3+1629*n^2-52250/3*n+39018",
      "33*n^2+2883*n-9470",
      "66*n+2246",
      "20",
      "3/4*n^4+1345/6*n^3-4795/4*n^2-56365/6*n+50848",
      "386*n^2+3406*n-36558",
      "2*n^2+486*n+5620",
      "494",
      "12",
      "27*n^2+2943*n-9474",
      "36*n+2292",
      "42",
      "438",
      "0",
      "103*n^4-1730*n^3+10649*n^2-28222*n+26880",
      "242*n^3-1351*n^2-8851*n+50190",
      "2/3*n^3+407*n^2+8761/3*n-34354",
      "552*n+5092",
      "536",
      "0",
      "38/3*n^3+1901*n^2-58931/3*n+45052",
      "23*n^2+3025*n-9914",
      "38*n+2410",
      "32",
      "408*n+6444",
      "398",
      "4",
      "6",
      "2/3*n^3+367*n^2+10801/3*n-37238",
      "456*n+6028",
      "436",
      "0",
      "22*n+2546",
      "20",
      "4",
      "240",
      "0",
      "265/24*n^4+5825/12*n^3-222565/24*n^2+612325/12*n-90755",
      "55/3*n^3+1761*n^2-55498/3*n+41958",
      "26*n^2+2974*n-9702",
      "42*n+2510",
      "38",
      "371*n^2+3669*n-37704",
      "n^2+459*n+5932",
      "414",
      "6",
      "22*n+2460",
      "34",
      "0",
      "11*n^2+3229*n-10788",
      "22*n+2510",
      "22",
      "294",
      "2",
      "26",
      "n^2+399*n+6552",
      "384",
      "4",
      "26",
      "0",
      "244*n^3-1395*n^2-8533*n+49434",
      "396*n^2+3252*n-35966",
      "528*n+5308",
      "434",
      "0",
      "18*n^2+3096*n-10136",
      "24*n+2492",
      "38",
      "350",
      "0",
      "408*n+6496",
      "386",
      "0",
      "14",
      "0",
      "12*n+2510",
      "14",
      "0",
      "362",
      "0",
      "77/6*n^3+1897*n^2-117677/6*n+44975",
      "21*n^2+3045*n-9924",
      "28*n+2592",
      "44",
      "420*n+6344",
      "366",
      "2",
      "16",
      "14*n+2578",
      "16",
      "2",
      "324",
      "2",
      "2",
      "2",
      "376*n^2+3592*n-37408",
      "480*n+5776",
      "384",
      "0",
      "16*n+2560",
      "32",
      "0",
      "288",
      "0",
      "16",
      "0",
      "27/2*n^2+6345/2*n-10467",
      "18*n+2592",
      "36",
      "306",
      "0",
      "18",
      "0",
      "420*n+6370",
      "360",
      "0",
      "20",
      "0",
      "11*n+2585",
      "22",
      "0",
      "312",
      "0",
      "13",
      "0",
  };
  return polys;
}

}  // namespace permball::reference
