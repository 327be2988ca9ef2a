package com.example;

import android.content.res.TypedArray;
import android.database.DatabaseUtils;
import android.graphics.Picture;
import android.os.Build;

public class Gamma {
    CharSequence[] nested(TypedArray a, boolean flag) {
        if (Build.VERSION.SDK_INT > 20) {
            if (flag) {
                return a.getTextArray(3);
            }
        }
        return a.getTextArray(4);
    }

    void both(String sql) {
        if (Build.VERSION.SDK_INT < Build.VERSION_CODES.P) {
            DatabaseUtils.getSqlStatementType(sql);
            DatabaseUtils.getSqlStatementType(sql + ";");
        }
    }

    int height(Picture p) {
        if (Build.VERSION.SDK_INT == 21) return p.getHeight();
        return -1;
    }
}
