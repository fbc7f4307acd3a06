"""Published section listings used as fixed oracles.

Each listing is the ordered member list of one section, largest first; a
leading ``*`` marks a sporadic.  Tails are the family strings in offset order.
"""

# T_0 above 4/3
T0_FIRST = [
    "2", "16/9", "5/3", "*128/81", "14/9", "40/27", "13/9", "38/27", "*1024/729", "112/81",
    "37/27", "110/81", "328/243", "109/81", "326/243", "976/729", "325/243", "974/729",
    "2920/2187", "973/729", "2918/2187", "8752/6561", "2917/2187", "8750/6561",
    "26248/19683", "8749/6561", "26246/19683", "78736/59049", "26245/19683", "78734/59049",
    "236200/177147", "78733/59049", "236198/177147",
]
T0_FIRST_TAILS = ['(4*3^k+4)/3^(k+1)', '(4*3^k+3)/3^(k+1)', '(4*3^k+2)/3^(k+1)']

# T_0 between 32/27 and 4/3
T0_AFTER_4_3 = [
    "320/243", "*35/27", "104/81", "34/27", "304/243", "*8192/6561", "100/81", "896/729",
    "11/9", "296/243", "98/81", "880/729", "292/243", "2624/2187", "97/81", "872/729",
    "290/243", "2608/2187", "868/729", "7808/6561", "289/243", "2600/2187", "866/729",
    "7792/6561", "2596/2187", "23360/19683", "865/729", "7784/6561", "2594/2187",
    "23344/19683", "7780/6561",
]
T0_AFTER_4_3_TAILS = ['(32*3^k+32)/3^(k+3)',
                      '(32*3^k+27)/3^(k+3)',
                      '(32*3^k+24)/3^(k+3)',
                      '(32*3^k+18)/3^(k+3)',
                      '(32*3^k+16)/3^(k+3)',
                      '(32*3^k+12)/3^(k+3)']

# T_0 between 10/9 and 32/27
T0_AFTER_32_27 = [
    "95/81", "*2560/2187", "280/243", "31/27", "*832/729", "92/81", "275/243", "820/729",
    "91/81", "272/243", "815/729", "2440/2187", "271/243", "812/729", "2435/2187",
    "7300/6561", "811/729", "2432/2187", "7295/6561", "21880/19683", "2431/2187",
    "7292/6561", "21875/19683", "65620/59049", "7291/6561", "21872/19683", "65615/59049",
    "196840/177147", "21871/19683", "65612/59049", "196835/177147",
]
T0_AFTER_32_27_TAILS = ['(10*3^k+10)/3^(k+2)',
                        '(10*3^k+9)/3^(k+2)',
                        '(10*3^k+6)/3^(k+2)',
                        '(10*3^k+5)/3^(k+2)']

# T_0 between 256/243 and 10/9
T0_AFTER_10_9 = [
    "*65536/59049", "800/729", "*266/243", "7168/6561", "88/81", "2368/2187", "784/729",
    "*29/27", "7040/6561", "260/243", "2336/2187", "20992/19683", "*259/243", "776/729",
    "6976/6561", "86/81", "2320/2187", "20864/19683", "772/729", "6944/6561", "62464/59049",
    "257/243", "2312/2187", "20800/19683", "770/729", "6928/6561", "62336/59049",
    "2308/2187", "20768/19683", "186880/177147", "769/729", "6920/6561", "62272/59049",
    "2306/2187", "20752/19683", "186752/177147", "6916/6561", "62240/59049",
]
T0_AFTER_10_9_TAILS = ['(256*3^k+256)/3^(k+5)',
                       '(256*3^k+243)/3^(k+5)',
                       '(256*3^k+216)/3^(k+5)',
                       '(256*3^k+192)/3^(k+5)',
                       '(256*3^k+162)/3^(k+5)',
                       '(256*3^k+144)/3^(k+5)',
                       '(256*3^k+128)/3^(k+5)',
                       '(256*3^k+108)/3^(k+5)',
                       '(256*3^k+96)/3^(k+5)']

# T_0 between 80/81 and 1
T0_AFTER_1 = [
    "6560/6561", "728/729", "2180/2187", "242/243", "2176/2187", "725/729", "6520/6561",
    "724/729", "2170/2187", "241/243", "19520/19683", "2168/2187", "6500/6561", "722/729",
    "6496/6561", "2165/2187", "19480/19683", "2164/2187", "6490/6561", "721/729",
    "58400/59049", "6488/6561", "19460/19683", "2162/2187", "19456/19683", "6485/6561",
    "58360/59049", "6484/6561", "19450/19683", "2161/2187",
]
T0_AFTER_1_TAILS = ['(80*3^k+80)/3^(k+4)',
                    '(80*3^k+72)/3^(k+4)',
                    '(80*3^k+60)/3^(k+4)',
                    '(80*3^k+54)/3^(k+4)',
                    '(80*3^k+48)/3^(k+4)',
                    '(80*3^k+45)/3^(k+4)',
                    '(80*3^k+40)/3^(k+4)',
                    '(80*3^k+36)/3^(k+4)',
                    '(80*3^k+30)/3^(k+4)',
                    '(80*3^k+27)/3^(k+4)']

# T_0 between 26/27 and 80/81
T0_AFTER_80_81 = [
    "*524288/531441", "715/729", "*238/243", "*6400/6561", "79/81", "2132/2187",
    "*2128/2187", "236/243", "*57344/59049", "2119/2187", "235/243", "6344/6561", "704/729",
    "6331/6561", "703/729", "18980/19683", "2108/2187", "18967/19683", "2107/2187",
    "56888/59049", "6320/6561", "56875/59049", "6319/6561", "170612/177147", "18956/19683",
    "170599/177147", "18955/19683", "511784/531441", "56864/59049", "511771/531441",
    "56863/59049",
]
T0_AFTER_80_81_TAILS = ['(26*3^k+26)/3^(k+3)',
                        '(26*3^k+18)/3^(k+3)',
                        '(26*3^k+13)/3^(k+3)',
                        '(26*3^k+9)/3^(k+3)']

# T_0 between 76/81 and 26/27
T0_AFTER_26_27 = [
    "*18944/19683", "*700/729", "*6272/6561", "2090/2187", "232/243", "*56320/59049",
    "*2080/2187", "77/81", "6232/6561", "*18688/19683", "*167936/177147", "*2072/2187",
    "2071/2187", "230/243", "*6208/6561", "*55808/59049", "6194/6561", "688/729",
    "*18560/19683", "229/243", "*166912/177147", "18544/19683", "*6176/6561", "6175/6561",
    "686/729", "*55552/59049", "*499712/531441", "18506/19683", "2056/2187", "*18496/19683",
    "685/729", "55480/59049", "*166400/177147", "18487/19683", "2054/2187", "55442/59049",
    "6160/6561", "2053/2187", "166288/177147", "*55424/59049", "55423/59049", "6158/6561",
    "166250/177147", "18472/19683", "6157/6561", "498712/531441", "166231/177147",
    "18470/19683", "*498688/531441", "498674/531441", "55408/59049", "18469/19683",
    "1495984/1594323", "498655/531441", "55406/59049", "1495946/1594323", "166216/177147",
    "55405/59049", "4487800/4782969", "1495927/1594323", "166214/177147", "4487762/4782969",
    "498640/531441", "166213/177147", "13463248/14348907", "4487743/4782969",
    "498638/531441", "13463210/14348907", "1495912/1594323", "498637/531441",
]
T0_AFTER_26_27_TAILS = ['(76*3^k+76)/3^(k+4)',
                        '(76*3^k+57)/3^(k+4)',
                        '(76*3^k+54)/3^(k+4)',
                        '(76*3^k+38)/3^(k+4)',
                        '(76*3^k+36)/3^(k+4)',
                        '(76*3^k+27)/3^(k+4)']

# T_1 above 1
T1_FIRST = [
    "4/3", "*32/27", "10/9", "*256/243", "28/27", "82/81", "244/243", "730/729",
    "2188/2187", "6562/6561", "19684/19683", "59050/59049", "177148/177147",
    "531442/531441", "1594324/1594323", "4782970/4782969", "14348908/14348907",
]
T1_FIRST_TAILS = ['(3^k+1)/3^k']

# T_1 between 8/9 and 1
T1_AFTER_1 = [
    "80/81", "26/27", "76/81", "*2048/2187", "25/27", "224/243", "74/81", "220/243",
    "73/81", "656/729", "218/243", "652/729", "217/243", "1952/2187", "650/729",
    "1948/2187", "649/729", "5840/6561", "1946/2187", "5836/6561", "1945/2187",
    "17504/19683", "5834/6561", "17500/19683", "5833/6561", "52496/59049", "17498/19683",
    "52492/59049", "17497/19683", "157472/177147", "52490/59049", "157468/177147",
    "52489/59049",
]
T1_AFTER_1_TAILS = ['(8*3^k+8)/3^(k+2)',
                    '(8*3^k+6)/3^(k+2)',
                    '(8*3^k+4)/3^(k+2)',
                    '(8*3^k+3)/3^(k+2)']

# T_2 above 2/3
T2_FIRST = [
    "1", "8/9", "*64/81", "7/9", "20/27", "19/27", "*512/729", "56/81", "55/81", "164/243",
    "163/243", "488/729", "487/729", "1460/2187", "1459/2187", "4376/6561", "4375/6561",
    "13124/19683", "13123/19683",
]
T2_FIRST_TAILS = ['(2*3^k+2)/3^(k+1)', '(2*3^k+1)/3^(k+1)']

# T_2 between 16/27 and 2/3
T2_AFTER_2_3 = [
    "160/243", "52/81", "17/27", "152/243", "*4096/6561", "50/81", "448/729", "148/243",
    "49/81", "440/729", "146/243", "1312/2187", "436/729", "145/243", "1304/2187",
    "434/729", "3904/6561", "1300/2187", "433/729", "3896/6561", "1298/2187", "11680/19683",
    "3892/6561", "1297/2187", "11672/19683", "3890/6561", "35008/59049", "11668/19683",
    "3889/6561", "35000/59049", "11666/19683",
]
T2_AFTER_2_3_TAILS = ['(16*3^k+16)/3^(k+3)',
                      '(16*3^k+12)/3^(k+3)',
                      '(16*3^k+9)/3^(k+3)',
                      '(16*3^k+8)/3^(k+3)',
                      '(16*3^k+6)/3^(k+3)']
