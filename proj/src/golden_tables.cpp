#include "cstat/golden_tables.hpp"

namespace cstat {

const std::vector<GoldenTable>& golden_tables() {
  static const std::vector<GoldenTable> tables = {
      {"Cdes2", "cdes", 2, "",
       {
           {1, {"0", "1"}},
           {2, {"0", "1", "2"}},
           {3, {"0", "1", "8", "6"}},
           {4, {"0", "1", "22", "58", "24"}},
           {5, {"0", "1", "52", "328", "444", "120"}},
           {6, {"0", "1", "114", "1452", "4400", "3708", "720"}},
           {7, {"0", "1", "240", "5610", "32120", "58140", "33984", "5040"}},
       }},
      {"Cdes3", "cdes", 3, "",
       {
           {1, {"0", "1"}},
           {2, {"0", "1", "3"}},
           {3, {"0", "1", "12", "15"}},
           {4, {"0", "1", "33", "141", "105"}},
           {5, {"0", "1", "78", "786", "1830", "945"}},
           {6, {"0", "1", "171", "3450", "17538", "26685", "10395"}},
           {7, {"0", "1", "360", "13257", "125352", "396495", "435960", "135135"}},
       }},
      {"Cpk2", "cpk", 2, "",
       {
           {1, {"1"}},
           {2, {"1", "2"}},
           {3, {"1", "10", "4"}},
           {4, {"1", "36", "60", "8"}},
           {5, {"1", "116", "516", "296", "16"}},
           {6, {"1", "358", "3508", "5168", "1328", "32"}},
           {7, {"1", "1086", "21120", "64240", "42960", "5664", "64"}},
       }},
      {"Cpk3", "cpk", 3, "",
       {
           {1, {"1"}},
           {2, {"1", "3"}},
           {3, {"1", "15", "12"}},
           {4, {"1", "54", "165", "60"}},
           {5, {"1", "174", "1365", "1740", "360"}},
           {6, {"1", "537", "9087", "27195", "18900", "2520"}},
           {7, {"1", "1629", "54027", "317583", "496440", "216720", "20160"}},
       }},
      {"Clpk2", "clpk", 2, "",
       {
           {1, {"0", "1"}},
           {2, {"0", "2", "1"}},
           {3, {"0", "4", "10", "1"}},
           {4, {"0", "8", "60", "36", "1"}},
           {5, {"0", "16", "296", "516", "116", "1"}},
           {6, {"0", "32", "1328", "5168", "3508", "358", "1"}},
           {7, {"0", "64", "5664", "42960", "64240", "21120", "1086", "1"}},
       }},
      {"Clpk3", "clpk", 3, "",
       {
           {1, {"0", "1"}},
           {2, {"0", "2", "2"}},
           {3, {"0", "4", "18", "6"}},
           {4, {"0", "8", "104", "144", "24"}},
           {5, {"0", "16", "504", "1800", "1200", "120"}},
           {6, {"0", "32", "2240", "16848", "27600", "10800", "720"}},
           {7, {"0", "64", "9504", "134688", "439824", "411600", "105840", "5040"}},
       }},
      {"ides213", "ides", 3, "213",
       {
           {0, {"1"}},
           {1, {"0", "1"}},
           {2, {"0", "1", "1"}},
           {3, {"0", "1", "3", "1"}},
           {4, {"0", "1", "7", "7", "1"}},
           {5, {"0", "1", "15", "32", "14", "1"}},
           {6, {"0", "1", "30", "123", "115", "26", "1"}},
           {7, {"0", "1", "57", "419", "738", "361", "46", "1"}},
           {8, {"0", "1", "105", "1307", "3983", "3663", "1037", "79", "1"}},
           {9, {"0", "1", "190", "3836", "18959", "29824", "16041", "2808", "133", "1"}},
       }},
      {"ides2134", "ides", 4, "2134",
       {
           {0, {"1"}},
           {1, {"0", "1"}},
           {2, {"0", "1", "1"}},
           {3, {"0", "1", "4", "1"}},
           {4, {"0", "1", "10", "11", "1"}},
           {5, {"0", "1", "22", "60", "26", "1"}},
           {6, {"0", "1", "45", "251", "275", "57", "1"}},
           {7, {"0", "1", "89", "910", "2000", "1083", "120", "1"}},
           {8, {"0", "1", "172", "3034", "11830", "12880", "3889", "247", "1"}},
           {9, {"0", "1", "328", "9580", "61504", "117535", "72304", "13159", "502", "1"}},
       }},
      {"ipk213", "ipk", 3, "213",
       {
           {0, {"1"}},
           {1, {"0", "1"}},
           {2, {"0", "2"}},
           {3, {"0", "3", "2"}},
           {4, {"0", "4", "12"}},
           {5, {"0", "5", "48", "10"}},
           {6, {"0", "6", "164", "126"}},
           {7, {"0", "7", "522", "992", "102"}},
           {8, {"0", "8", "1608", "6320", "2240"}},
           {9, {"0", "9", "4880", "35860", "29250", "1794"}},
       }},
      {"ipk2134", "ipk", 4, "2134",
       {
           {0, {"1"}},
           {1, {"0", "1"}},
           {2, {"0", "2"}},
           {3, {"0", "4", "2"}},
           {4, {"0", "7", "16"}},
           {5, {"0", "12", "82", "16"}},
           {6, {"0", "20", "356", "254"}},
           {7, {"0", "33", "1427", "2496", "248"}},
           {8, {"0", "54", "5500", "19756", "6744"}},
           {9, {"0", "88", "20780", "138774", "108752", "6520"}},
       }},
      {"ipk132", "ipk", 3, "132",
       {
           {0, {"1"}},
           {1, {"0", "1"}},
           {2, {"0", "2"}},
           {3, {"0", "4", "1"}},
           {4, {"0", "8", "8"}},
           {5, {"0", "16", "42", "5"}},
           {6, {"0", "32", "184", "80"}},
           {7, {"0", "64", "732", "770", "57"}},
           {8, {"0", "128", "2752", "5816", "1480"}},
           {9, {"0", "256", "9992", "38212", "22232", "1101"}},
       }},
      {"ipk1243", "ipk", 4, "1243",
       {
           {0, {"1"}},
           {1, {"0", "1"}},
           {2, {"0", "2"}},
           {3, {"0", "4", "2"}},
           {4, {"0", "8", "15"}},
           {5, {"0", "16", "80", "14"}},
           {6, {"0", "32", "368", "230"}},
           {7, {"0", "64", "1570", "2354", "216"}},
           {8, {"0", "128", "6424", "19420", "6082"}},
           {9, {"0", "256", "25664", "141840", "101408", "5746"}},
       }},
      {"ilpk213", "ilpk", 3, "213",
       {
           {0, {"1"}},
           {1, {"1"}},
           {2, {"1", "1"}},
           {3, {"1", "4"}},
           {4, {"1", "12", "3"}},
           {5, {"1", "33", "29"}},
           {6, {"1", "87", "187", "21"}},
           {7, {"1", "224", "1006", "392"}},
           {8, {"1", "570", "4880", "4430", "295"}},
           {9, {"1", "1443", "22214", "39318", "8817"}},
       }},
      {"ilpk2134", "ilpk", 4, "2134",
       {
           {0, {"1"}},
           {1, {"1"}},
           {2, {"1", "1"}},
           {3, {"1", "5"}},
           {4, {"1", "17", "5"}},
           {5, {"1", "52", "57"}},
           {6, {"1", "152", "422", "55"}},
           {7, {"1", "437", "2589", "1177"}},
           {8, {"1", "1247", "14394", "15285", "1127"}},
           {9, {"1", "3548", "75540", "156926", "38899"}},
       }},
  };
  return tables;
}

}  // namespace cstat
